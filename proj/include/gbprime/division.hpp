#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gbprime/errors.hpp"
#include "gbprime/ordering.hpp"
#include "gbprime/polynomial.hpp"

namespace gbprime {

/// Outcome of dividing f by an ordered list of divisors:
/// f = sum(quotients[i] * divisors[i]) + remainder, and no remainder term is
/// divisible by the leading monomial of any nonzero divisor.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Generalized multivariate long division. Scans the divisor list in order
/// and always reduces by the first divisor whose leading term divides the
/// working leading term, so the result is deterministic for a fixed divisor
/// order (permuting divisors may legitimately change quotients and
/// remainder). Zero divisors are allowed and skipped; if every divisor is
/// zero the quotients are zero and the remainder is f.
///
/// Terminates because the working leading term strictly decreases in the
/// monomial well-order on every iteration. step_limit optionally caps those
/// iterations; the default is unlimited.
inline DivisionResult multivariate_divide(
    const Polynomial& f, const std::vector<Polynomial>& divisors,
    MonomialOrder ord, std::optional<std::uint64_t> step_limit = std::nullopt) {
  if (divisors.empty())
    throw std::invalid_argument("multivariate_divide requires at least one divisor");

  DivisionResult result;
  result.quotients.assign(divisors.size(), Polynomial());
  Polynomial p = f;
  std::uint64_t steps = 0;

  while (!p.is_zero()) {
    if (step_limit && ++steps > *step_limit)
      throw StepLimitExceededError("division exceeded configured step limit");
    const Term lt_p = leading_term(p, ord);  // copy: p changes below
    bool division_occurred = false;
    for (std::size_t i = 0; i < divisors.size() && !division_occurred; ++i) {
      if (divisors[i].is_zero()) continue;
      const Term& lt_fi = leading_term(divisors[i], ord);
      if (!divides(lt_fi.mono, lt_p.mono)) continue;
      Term q = divide_term(lt_p, lt_fi);
      result.quotients[i] = add(result.quotients[i], Polynomial({q}));
      p = sub(p, mul_term(divisors[i], q));
      division_occurred = true;
    }
    if (!division_occurred) {
      Polynomial lead({lt_p});
      result.remainder = add(result.remainder, lead);
      p = sub(p, lead);
    }
  }
  return result;
}

}  // namespace gbprime
