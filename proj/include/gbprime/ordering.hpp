#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>

#include "gbprime/errors.hpp"
#include "gbprime/monomial.hpp"
#include "gbprime/polynomial.hpp"

namespace gbprime {

enum class OrderKind {
  /// Compare the integer images under the prime substitution. Total because
  /// the encoding is injective, multiplicative because it is a homomorphism,
  /// and 1 is the minimum because the image of 1 is 1. No tie-break needed.
  PrimeEncoded,
  /// Variable priority x0 > x1 > ...; first differing exponent decides.
  Lexicographic,
  /// Total degree first, lex as tie-break.
  GradedLexicographic,
};

/// Strategy value selecting one of the monomial orders.
class MonomialOrder {
public:
  constexpr MonomialOrder(OrderKind kind = OrderKind::PrimeEncoded)
      : kind_(kind) {}

  constexpr OrderKind kind() const noexcept { return kind_; }

  static std::optional<MonomialOrder> from_name(std::string_view name) {
    if (name == "prime") return MonomialOrder(OrderKind::PrimeEncoded);
    if (name == "lex") return MonomialOrder(OrderKind::Lexicographic);
    if (name == "grlex") return MonomialOrder(OrderKind::GradedLexicographic);
    return std::nullopt;
  }

  std::string_view name() const noexcept {
    switch (kind_) {
      case OrderKind::PrimeEncoded: return "prime";
      case OrderKind::Lexicographic: return "lex";
      case OrderKind::GradedLexicographic: return "grlex";
    }
    return "?";
  }

  friend bool operator==(MonomialOrder a, MonomialOrder b) {
    return a.kind_ == b.kind_;
  }

private:
  OrderKind kind_;
};

namespace detail {

inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) <=> b.exponent(i);
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    MonomialOrder ord) {
  detail::check_same_arity(a, b);
  switch (ord.kind()) {
    case OrderKind::PrimeEncoded:
      return cmp(a.encoding(), b.encoding()) <=> 0;
    case OrderKind::Lexicographic:
      return detail::lex_compare(a, b);
    case OrderKind::GradedLexicographic:
      if (a.total_degree() != b.total_degree())
        return a.total_degree() <=> b.total_degree();
      return detail::lex_compare(a, b);
  }
  return std::strong_ordering::equal;  // unreachable
}

/// The maximal term of f under ord, coefficient included.
inline const Term& leading_term(const Polynomial& f, MonomialOrder ord) {
  if (f.is_zero())
    throw ZeroPolynomialError("leading term of the zero polynomial");
  // Canonical order is descending prime encoding, so the front term is the
  // answer for the prime order; other orders scan.
  if (ord.kind() == OrderKind::PrimeEncoded) return f.terms().front();
  const Term* best = &f.terms().front();
  for (const Term& t : f.terms())
    if (compare(best->mono, t.mono, ord) < 0) best = &t;
  return *best;
}

inline const Monomial& leading_monomial(const Polynomial& f,
                                        MonomialOrder ord) {
  return leading_term(f, ord).mono;
}

inline const Rational& leading_coefficient(const Polynomial& f,
                                           MonomialOrder ord) {
  return leading_term(f, ord).coeff;
}

/// Deterministic total order on canonical polynomials: compare term by term
/// (monomial under ord, then coefficient), shorter prefix first. Used to give
/// the Buchberger loop and reduced bases a stable processing order.
inline std::strong_ordering compare_polynomials(const Polynomial& f,
                                                const Polynomial& g,
                                                MonomialOrder ord) {
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  for (std::size_t i = 0; i < ft.size() && i < gt.size(); ++i) {
    auto c = compare(ft[i].mono, gt[i].mono, ord);
    if (c != 0) return c;
    int cc = cmp(ft[i].coeff, gt[i].coeff);
    if (cc != 0) return cc <=> 0;
  }
  return ft.size() <=> gt.size();
}

}  // namespace gbprime
