#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gbprime/errors.hpp"
#include "gbprime/ordering.hpp"
#include "gbprime/polynomial.hpp"

namespace gbprime {

/// Policy for reduce_polynomial. Off is the identity and the safe default;
/// Paper divides out the common monomial content of the terms and collapses
/// lone non-power terms to 1, which bounds degrees but can enlarge the ideal
/// (see reduce_polynomial).
enum class ReductionMode { Off, Paper };

/// S(f, g) = (L / LT(f)) * f - (L / LT(g)) * g, where L is the monic lcm of
/// the leading monomials. The construction cancels both leading terms, so L
/// itself never appears in the result.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               MonomialOrder ord) {
  if (f.is_zero() || g.is_zero())
    throw ZeroPolynomialError("s_polynomial of the zero polynomial");
  const Term& lt_f = leading_term(f, ord);
  const Term& lt_g = leading_term(g, ord);
  Monomial l = monomial_lcm(lt_f.mono, lt_g.mono);
  Monomial mf = monomial_quotient(l, lt_f.mono);
  Monomial mg = monomial_quotient(l, lt_g.mono);
  Term uf{Rational(1) / lt_f.coeff, std::move(mf)};
  Term ug{Rational(1) / lt_g.coeff, std::move(mg)};
  return sub(mul_term(f, uf), mul_term(g, ug));
}

/// One S-polynomial per unordered pair (i, j), i < j, in nested-loop order.
inline std::vector<Polynomial> all_s_polynomials(
    const std::vector<Polynomial>& basis, MonomialOrder ord) {
  std::vector<Polynomial> out;
  if (basis.size() < 2) return out;
  out.reserve(basis.size() * (basis.size() - 1) / 2);
  for (std::size_t i = 0; i + 1 < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      out.push_back(s_polynomial(basis[i], basis[j], ord));
  return out;
}

/// Degree-control heuristic applied to S-polynomials before division.
///
/// Paper mode, checked in this order:
///   1. a nonzero constant term present -> unchanged;
///   2. zero -> zero;
///   3. a single term: x_i^k with coefficient 1 is returned unchanged, any
///      other single term collapses to 1;
///   4. otherwise divide every monomial by the monomial gcd of all terms
///      (coefficients untouched); gcd 1 means unchanged.
///
/// Dividing by a monomial factor can discard solution components where some
/// variable is zero, so this mode is only selected by the paper-faithful
/// profile and every report records which mode produced it.
inline Polynomial reduce_polynomial(const Polynomial& f, ReductionMode mode) {
  if (mode == ReductionMode::Off) return f;
  if (f.is_zero()) return f;
  if (f.constant_term() != nullptr) return f;

  if (f.term_count() == 1) {
    const Term& t = f.terms().front();
    std::size_t vars_used = 0;
    for (std::size_t i = 0; i < t.mono.num_vars(); ++i)
      if (t.mono.exponent(i) > 0) ++vars_used;
    const bool bare_power = t.coeff == 1 && vars_used == 1;
    if (bare_power) return f;
    return Polynomial::constant(1, t.mono.num_vars());
  }

  Monomial content = f.terms().front().mono;
  for (std::size_t i = 1; i < f.term_count(); ++i)
    content = monomial_gcd(content, f.terms()[i].mono);
  if (content.is_one()) return f;

  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const Term& t : f.terms())
    out.push_back(Term{t.coeff, monomial_quotient(t.mono, content)});
  return Polynomial(std::move(out));
}

}  // namespace gbprime
