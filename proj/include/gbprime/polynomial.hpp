#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gbprime/errors.hpp"
#include "gbprime/monomial.hpp"

namespace gbprime {

/// Exact rational coefficient. mpq_class keeps values in lowest terms with a
/// positive denominator as long as inputs are canonical; anything built from
/// raw numerator/denominator pairs must call canonicalize() first (the parser
/// does).
using Rational = mpq_class;

/// A nonzero coefficient times a monomial.
struct Term {
  Rational coeff;
  Monomial mono;
};

inline bool operator==(const Term& a, const Term& b) {
  return a.coeff == b.coeff && a.mono == b.mono;
}
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

inline Term mul(const Term& a, const Term& b) {
  Monomial mono = a.mono * b.mono;
  return Term{a.coeff * b.coeff, std::move(mono)};
}

/// t1 / t2; requires t2's monomial to divide t1's.
inline Term divide_term(const Term& t1, const Term& t2) {
  if (t2.coeff == 0)
    throw std::invalid_argument("divide_term by a zero-coefficient term");
  Monomial mono = monomial_quotient(t1.mono, t2.mono);
  return Term{t1.coeff / t2.coeff, std::move(mono)};
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a single canonical form: strictly descending by prime
/// encoding, no repeated monomials, no zero coefficients, empty list for the
/// zero polynomial. Structural equality is therefore mathematical equality,
/// which makes dedup and hashing order-independent. Note the canonical term
/// order is fixed to the prime encoding even when a computation runs under
/// lex or graded-lex.
class Polynomial {
public:
  /// The zero polynomial.
  Polynomial() = default;

  /// Canonicalizes: merges duplicate monomials, drops zero coefficients,
  /// sorts descending by encoding.
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial zero() { return Polynomial(); }

  static Polynomial constant(Rational value, std::size_t num_vars) {
    if (value == 0) return Polynomial();
    return Polynomial({Term{std::move(value), Monomial::one(num_vars)}});
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// The term with monomial 1, or nullptr if absent. The constant term, when
  /// present, is always last in canonical order.
  const Term* constant_term() const noexcept {
    if (!terms_.empty() && terms_.back().mono.is_one()) return &terms_.back();
    return nullptr;
  }

  bool is_nonzero_constant() const noexcept {
    return terms_.size() == 1 && terms_.front().mono.is_one();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  friend Polynomial add(const Polynomial& f, const Polynomial& g);
  friend Polynomial negate(const Polynomial& f);
  friend Polynomial mul_term(const Polynomial& f, const Term& t);

private:
  struct Unnormalized {};
  Polynomial(std::vector<Term> terms, Unnormalized) : terms_(std::move(terms)) {}

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return cmp(a.mono.encoding(), b.mono.encoding()) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff += t.coeff;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;  // strictly descending by mono.encoding()
};

/// Merge of two canonical term lists; encodings are compared directly, equal
/// encodings mean equal monomials.
inline Polynomial add(const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  auto it = f.terms_.begin();
  auto jt = g.terms_.begin();
  while (it != f.terms_.end() && jt != g.terms_.end()) {
    int c = cmp(it->mono.encoding(), jt->mono.encoding());
    if (c > 0) {
      out.push_back(*it++);
    } else if (c < 0) {
      out.push_back(*jt++);
    } else {
      Rational sum = it->coeff + jt->coeff;
      if (sum != 0) out.push_back(Term{std::move(sum), it->mono});
      ++it;
      ++jt;
    }
  }
  out.insert(out.end(), it, f.terms_.end());
  out.insert(out.end(), jt, g.terms_.end());
  return Polynomial(std::move(out), Polynomial::Unnormalized{});
}

inline Polynomial negate(const Polynomial& f) {
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(std::move(out), Polynomial::Unnormalized{});
}

inline Polynomial sub(const Polynomial& f, const Polynomial& g) {
  return add(f, negate(g));
}

/// Multiplies every term of f by t. Scaling all encodings by the same factor
/// preserves the descending order, so no re-sort is needed.
inline Polynomial mul_term(const Polynomial& f, const Term& t) {
  if (t.coeff == 0) return Polynomial();
  std::vector<Term> out;
  out.reserve(f.terms_.size());
  for (const auto& ft : f.terms_) out.push_back(mul(ft, t));
  return Polynomial(std::move(out), Polynomial::Unnormalized{});
}

inline Polynomial mul(const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) out.push_back(mul(a, b));
  return Polynomial(std::move(out));
}

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  return add(f, g);
}
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  return sub(f, g);
}
inline Polynomial operator-(const Polynomial& f) { return negate(f); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  return mul(f, g);
}

inline Polynomial pow(const Polynomial& base, unsigned exponent,
                      std::size_t num_vars) {
  Polynomial result = Polynomial::constant(1, num_vars);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, b);
    exponent >>= 1u;
    if (exponent > 0) b = mul(b, b);
  }
  return result;
}

namespace detail {

inline void render_monomial(std::ostream& os, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (e > 1) os << '^' << e;
    first = false;
  }
}

}  // namespace detail

/// Canonical rendering: terms in descending encoding order, " + "/" - "
/// separators, "a/b" rationals, "^" powers and explicit "*" products. The
/// output re-parses to the same polynomial.
inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  if (f.is_zero()) return os << '0';
  bool first = true;
  for (const Term& t : f.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    if (t.mono.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      detail::render_monomial(os, t.mono);
    }
    first = false;
  }
  return os;
}

inline std::string render_polynomial(const Polynomial& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

inline std::string render_term(const Term& t) {
  return render_polynomial(Polynomial({t}));
}

}  // namespace gbprime
