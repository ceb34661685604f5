#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbprime/errors.hpp"

namespace gbprime {

/// Arbitrary-precision integer. Monomial encodings grow past machine words
/// quickly (x9^20 is 29^20), so nothing here uses fixed-width arithmetic.
using Integer = mpz_class;

/// Returns the first `count` primes: 2, 3, 5, ...
inline std::vector<Integer> first_primes(std::size_t count) {
  std::vector<Integer> primes;
  primes.reserve(count);
  Integer p = 1;
  while (primes.size() < count) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    primes.push_back(p);
  }
  return primes;
}

/// A fixed set of variables x0..x{n-1}, each assigned one of the first n
/// primes (x0 -> 2, x1 -> 3, ...). The assignment is what makes the integer
/// image of a monomial unique, so everything downstream takes its variable
/// count from here.
class VarContext {
public:
  explicit VarContext(std::size_t num_vars) : primes_(first_primes(num_vars)) {
    if (num_vars == 0)
      throw std::invalid_argument("VarContext requires at least one variable");
  }

  std::size_t num_vars() const noexcept { return primes_.size(); }
  const std::vector<Integer>& primes() const noexcept { return primes_; }
  const Integer& prime(std::size_t i) const { return primes_.at(i); }

private:
  std::vector<Integer> primes_;
};

/// A power product of variables with nonnegative integer exponents.
///
/// Each monomial caches its prime encoding, the integer obtained by
/// substituting the i-th prime for x_i. The encoding is multiplicative
/// (encode(a*b) = encode(a)*encode(b)) and injective by unique factorization,
/// so products, quotients, lcm and gcd keep it up to date with plain integer
/// arithmetic and never have to re-run the substitution.
class Monomial {
public:
  /// Builds a monomial from an exponent vector; the vector length must match
  /// the context's variable count.
  Monomial(std::vector<unsigned> exponents, const VarContext& ctx)
      : exponents_(std::move(exponents)) {
    if (exponents_.size() != ctx.num_vars())
      throw ArityMismatchError("exponent vector length " +
                               std::to_string(exponents_.size()) +
                               " does not match variable count " +
                               std::to_string(ctx.num_vars()));
    encoding_ = 1;
    Integer power;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      if (exponents_[i] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), ctx.prime(i).get_mpz_t(), exponents_[i]);
      encoding_ *= power;
    }
  }

  /// The monomial 1 (all exponents zero). Needs no primes.
  static Monomial one(std::size_t num_vars) {
    return Monomial(std::vector<unsigned>(num_vars, 0), Integer(1));
  }

  /// The monomial x_index.
  static Monomial variable(std::size_t index, const VarContext& ctx) {
    std::vector<unsigned> exps(ctx.num_vars(), 0);
    exps.at(index) = 1;
    return Monomial(std::move(exps), ctx);
  }

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }
  unsigned exponent(std::size_t i) const { return exponents_.at(i); }

  /// Cached prime encoding, maintained across all operations.
  const Integer& encoding() const noexcept { return encoding_; }

  unsigned total_degree() const noexcept {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
  }

  bool is_one() const noexcept { return encoding_ == 1; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial monomial_quotient(const Monomial& m, const Monomial& d);
  friend Monomial monomial_lcm(const Monomial& a, const Monomial& b);
  friend Monomial monomial_gcd(const Monomial& a, const Monomial& b);
  friend Monomial decode(const Integer& value, const VarContext& ctx);

private:
  Monomial(std::vector<unsigned> exponents, Integer encoding)
      : exponents_(std::move(exponents)), encoding_(std::move(encoding)) {}

  std::vector<unsigned> exponents_;
  Integer encoding_;
};

namespace detail {
inline void check_same_arity(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw ArityMismatchError("monomials from different contexts: " +
                             std::to_string(a.num_vars()) + " vs " +
                             std::to_string(b.num_vars()) + " variables");
}
}  // namespace detail

/// Integer image of a monomial under the prime substitution, recomputed from
/// the exponents. Monomial::encoding() returns the cached equivalent.
inline Integer encode(const Monomial& m, const VarContext& ctx) {
  if (m.num_vars() != ctx.num_vars())
    throw ArityMismatchError("monomial has " + std::to_string(m.num_vars()) +
                             " variables, context has " +
                             std::to_string(ctx.num_vars()));
  Integer result = 1;
  Integer power;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m.exponent(i) == 0) continue;
    mpz_pow_ui(power.get_mpz_t(), ctx.prime(i).get_mpz_t(), m.exponent(i));
    result *= power;
  }
  return result;
}

/// Inverse of encode: factor `value` over the context primes.
inline Monomial decode(const Integer& value, const VarContext& ctx) {
  if (value <= 0)
    throw std::invalid_argument("decode requires a positive integer");
  std::vector<unsigned> exps(ctx.num_vars(), 0);
  Integer rest = value;
  for (std::size_t i = 0; i < ctx.num_vars(); ++i) {
    while (mpz_divisible_p(rest.get_mpz_t(), ctx.prime(i).get_mpz_t())) {
      rest /= ctx.prime(i);
      ++exps[i];
    }
  }
  if (rest != 1)
    throw ForeignPrimeFactorError("integer " + value.get_str() +
                                  " has a prime factor outside the context");
  return Monomial(std::move(exps), value);
}

/// Componentwise divisibility test: d | m iff every exponent of d is <= the
/// matching exponent of m. The authoritative implementation; agrees with
/// encoded_divides by unique factorization.
inline bool divides(const Monomial& d, const Monomial& m) {
  detail::check_same_arity(d, m);
  for (std::size_t i = 0; i < d.num_vars(); ++i)
    if (d.exponent(i) > m.exponent(i)) return false;
  return true;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  detail::check_same_arity(a, b);
  std::vector<unsigned> exps(a.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = a.exponents_[i] + b.exponents_[i];
  return Monomial(std::move(exps), a.encoding_ * b.encoding_);
}

/// m / d with exact componentwise subtraction.
inline Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
  if (!divides(d, m))
    throw NotDivisibleError("monomial quotient is not a monomial");
  std::vector<unsigned> exps(m.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = m.exponents_[i] - d.exponents_[i];
  return Monomial(std::move(exps), m.encoding_ / d.encoding_);
}

/// Componentwise max of exponents; the encoding is the integer lcm.
inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  detail::check_same_arity(a, b);
  std::vector<unsigned> exps(a.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(exps), lcm(a.encoding_, b.encoding_));
}

/// Componentwise min of exponents; the encoding is the integer gcd.
inline Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  detail::check_same_arity(a, b);
  std::vector<unsigned> exps(a.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = std::min(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(exps), gcd(a.encoding_, b.encoding_));
}

// Integer-arithmetic route for divisibility/lcm/gcd. Mathematically equal to
// the componentwise versions above; kept separate so tests can compare the
// two routes.

inline bool encoded_divides(const Monomial& d, const Monomial& m) {
  detail::check_same_arity(d, m);
  return mpz_divisible_p(m.encoding().get_mpz_t(), d.encoding().get_mpz_t()) != 0;
}

inline Monomial encoded_monomial_lcm(const Monomial& a, const Monomial& b,
                                     const VarContext& ctx) {
  return decode(lcm(a.encoding(), b.encoding()), ctx);
}

inline Monomial encoded_monomial_gcd(const Monomial& a, const Monomial& b,
                                     const VarContext& ctx) {
  return decode(gcd(a.encoding(), b.encoding()), ctx);
}

}  // namespace gbprime
