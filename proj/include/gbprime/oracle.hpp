#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gbprime/errors.hpp"
#include "gbprime/monomial.hpp"
#include "gbprime/polynomial.hpp"

namespace gbprime {

/// Exact substitution of a rational point into f.
inline Rational evaluate(const Polynomial& f,
                         const std::vector<Rational>& point) {
  Rational total(0);
  for (const Term& t : f.terms()) {
    if (t.mono.num_vars() != point.size())
      throw ArityMismatchError("point has " + std::to_string(point.size()) +
                               " coordinates, polynomial has " +
                               std::to_string(t.mono.num_vars()) +
                               " variables");
    Rational value = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.mono.exponent(i); ++e) value *= point[i];
    total += value;
  }
  return total;
}

/// A point of {0,1}^n, one 0/1 entry per variable.
using BooleanPoint = std::vector<int>;

/// Exhaustive common roots of F over {0,1}^n, in lexicographic point order.
/// This is the ground truth the solvability verdict is tested against for
/// systems that contain every field equation x_i^2 - x_i; it shares nothing
/// with the basis computation beyond the polynomial type.
inline std::vector<BooleanPoint> boolean_solutions(
    const std::vector<Polynomial>& F, const VarContext& ctx) {
  const std::size_t n = ctx.num_vars();
  if (n > 20)
    throw TooManyVariablesError(
        "brute-force enumeration limited to 20 variables, got " +
        std::to_string(n));

  std::vector<BooleanPoint> solutions;
  const std::uint64_t count = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Rational> point(n);
    BooleanPoint bits(n);
    for (std::size_t i = 0; i < n; ++i) {
      int bit = static_cast<int>((mask >> (n - 1 - i)) & 1u);  // x0 first
      bits[i] = bit;
      point[i] = bit;
    }
    bool root = true;
    for (const Polynomial& f : F)
      if (evaluate(f, point) != 0) {
        root = false;
        break;
      }
    if (root) solutions.push_back(std::move(bits));
  }
  return solutions;
}

/// True iff F contains x_i^2 - x_i for every variable of the context.
inline bool has_all_field_equations(const std::vector<Polynomial>& F,
                                    const VarContext& ctx) {
  for (std::size_t i = 0; i < ctx.num_vars(); ++i) {
    Monomial xi = Monomial::variable(i, ctx);
    Polynomial field_eq = sub(Polynomial({Term{Rational(1), xi * xi}}),
                              Polynomial({Term{Rational(1), xi}}));
    bool found = false;
    for (const Polynomial& f : F)
      if (f == field_eq) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace gbprime
