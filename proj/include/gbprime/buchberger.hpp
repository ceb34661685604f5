#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbprime/division.hpp"
#include "gbprime/errors.hpp"
#include "gbprime/ordering.hpp"
#include "gbprime/polynomial.hpp"
#include "gbprime/spoly.hpp"

namespace gbprime {

/// PaperFaithful fixes the prime order and turns the monomial-content
/// reduction heuristic on; Conservative keeps reduction off and re-verifies
/// the Buchberger criterion on the returned basis.
enum class Profile { PaperFaithful, Conservative };

enum class Verdict { Consistent, Inconsistent };

inline std::string_view profile_name(Profile p) {
  return p == Profile::PaperFaithful ? "paper" : "conservative";
}

inline std::string_view verdict_name(Verdict v) {
  return v == Verdict::Inconsistent ? "inconsistent" : "consistent";
}

struct BuchbergerConfig {
  MonomialOrder order{OrderKind::PrimeEncoded};
  ReductionMode reduction{ReductionMode::Off};
  std::optional<unsigned> max_passes{};
  Profile profile{Profile::Conservative};
  /// Skip pairs whose leading monomials are coprime when generating
  /// S-polynomials. Off by default: the reference loop generates all pairs.
  bool skip_coprime_pairs{false};
  /// Per-pass event log; not owned.
  std::ostream* trace{nullptr};

  static BuchbergerConfig paper_faithful() {
    BuchbergerConfig cfg;
    cfg.order = MonomialOrder(OrderKind::PrimeEncoded);
    cfg.reduction = ReductionMode::Paper;
    cfg.profile = Profile::PaperFaithful;
    return cfg;
  }

  static BuchbergerConfig conservative(
      MonomialOrder ord = MonomialOrder(OrderKind::PrimeEncoded)) {
    BuchbergerConfig cfg;
    cfg.order = ord;
    cfg.reduction = ReductionMode::Off;
    cfg.profile = Profile::Conservative;
    return cfg;
  }
};

/// Result of a Buchberger run. The input generators sit at the front of the
/// basis (the loop only appends), and the config that produced the run is
/// kept so reports always record which order/reduction was in effect.
struct BasisReport {
  std::vector<Polynomial> basis;
  unsigned passes{0};
  bool contradiction{false};
  Verdict verdict{Verdict::Consistent};
  std::vector<Polynomial> generators;
  BuchbergerConfig config;
};

/// Inconsistent iff the basis contains a nonzero constant, the certificate
/// that the generators have no common root over an algebraically closed
/// field.
inline Verdict solvability_verdict_of(const std::vector<Polynomial>& basis) {
  for (const Polynomial& g : basis)
    if (g.is_nonzero_constant()) return Verdict::Inconsistent;
  return Verdict::Consistent;
}

inline Verdict solvability_verdict(const BasisReport& report) {
  return solvability_verdict_of(report.basis);
}

namespace detail {

inline void assert_buchberger_criterion(const std::vector<Polynomial>& basis,
                                        MonomialOrder ord) {
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = s_polynomial(basis[i], basis[j], ord);
      if (!multivariate_divide(s, basis, ord).remainder.is_zero())
        throw Error("internal error: returned basis fails the Buchberger "
                    "criterion for pair (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")");
    }
  }
}

}  // namespace detail

/// Fixed-point Buchberger loop.
///
/// Each pass: generate the S-polynomial of every pair of the pass-start
/// basis, apply reduce_polynomial per config, drop zeros, deduplicate by
/// structural equality, then divide each survivor by the basis *as it
/// grows*, appending every nonzero remainder. A nonzero constant (appended
/// or already present) raises the contradiction flag and ends the run; a
/// pass that appends nothing is the fixed point.
///
/// Survivors are processed in ascending order under the active monomial
/// order. Some deterministic order is required because the within-pass
/// divisions see earlier appends; smallest-first keeps the basis small by
/// letting short remainders reduce the longer survivors that follow.
inline BasisReport buchberger(const std::vector<Polynomial>& generators,
                              const BuchbergerConfig& cfg) {
  if (generators.empty())
    throw std::invalid_argument("buchberger requires at least one generator");

  BasisReport report;
  report.config = cfg;
  for (const Polynomial& f : generators)
    if (!f.is_zero()) report.generators.push_back(f);

  std::vector<Polynomial>& basis = report.basis;
  basis = report.generators;

  auto trace = [&](const std::string& line) {
    if (cfg.trace) *cfg.trace << line << '\n';
  };

  for (;;) {
    const std::size_t size_before = basis.size();
    ++report.passes;

    std::vector<Polynomial> spolys;
    if (cfg.skip_coprime_pairs) {
      for (std::size_t i = 0; i + 1 < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
          if (monomial_gcd(leading_monomial(basis[i], cfg.order),
                           leading_monomial(basis[j], cfg.order))
                  .is_one())
            continue;
          spolys.push_back(s_polynomial(basis[i], basis[j], cfg.order));
        }
    } else {
      spolys = all_s_polynomials(basis, cfg.order);
    }
    const std::size_t raw_count = spolys.size();

    for (Polynomial& s : spolys) s = reduce_polynomial(s, cfg.reduction);
    std::erase_if(spolys, [](const Polynomial& s) { return s.is_zero(); });

    std::sort(spolys.begin(), spolys.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                return compare_polynomials(a, b, cfg.order) < 0;
              });
    spolys.erase(std::unique(spolys.begin(), spolys.end()), spolys.end());

    trace("[pass " + std::to_string(report.passes) + "] basis size " +
          std::to_string(basis.size()) + ", s-polynomials " +
          std::to_string(raw_count) + ", surviving dedup " +
          std::to_string(spolys.size()));

    for (const Polynomial& s : spolys) {
      Polynomial remainder =
          multivariate_divide(s, basis, cfg.order).remainder;
      if (remainder.is_zero()) continue;
      basis.push_back(remainder);
      trace("[pass " + std::to_string(report.passes) + "] append g" +
            std::to_string(basis.size() - 1) + " = " +
            render_polynomial(remainder));
      if (remainder.is_nonzero_constant()) {
        report.contradiction = true;
        break;
      }
    }

    if (!report.contradiction)
      report.contradiction =
          solvability_verdict_of(basis) == Verdict::Inconsistent;

    if (report.contradiction) {
      trace("[pass " + std::to_string(report.passes) +
            "] contradiction: nonzero constant in basis");
      break;
    }
    if (basis.size() == size_before) {
      trace("[pass " + std::to_string(report.passes) + "] fixed point");
      break;
    }
    if (cfg.max_passes && report.passes >= *cfg.max_passes)
      throw PassLimitExceededError(
          "no fixed point after " + std::to_string(report.passes) + " passes");
  }

  report.verdict = solvability_verdict_of(basis);

  // Conservative runs promise a true Groebner basis; verify it. Skipped in
  // paper-faithful mode, where the reduction heuristic can break it.
  if (cfg.profile == Profile::Conservative)
    detail::assert_buchberger_criterion(basis, cfg.order);

  return report;
}

/// Interreduces a Groebner basis into the reduced Groebner basis: monic
/// elements, no monomial of any element divisible by another element's
/// leading monomial, sorted ascending by leading monomial. Unique per ideal
/// and order, so the output is independent of how the input basis was found.
/// Only meaningful when G really is a Groebner basis under ord.
inline std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G,
                                            MonomialOrder ord) {
  auto monic = [&](const Polynomial& f) {
    const Rational& lc = leading_coefficient(f, ord);
    if (lc == 1) return f;
    std::size_t n = f.terms().front().mono.num_vars();
    return mul_term(f, Term{Rational(1) / lc, Monomial::one(n)});
  };

  std::vector<Polynomial> work;
  for (const Polynomial& g : G)
    if (!g.is_zero()) work.push_back(monic(g));
  if (work.empty())
    throw EmptyBasisError("reduce_basis requires a nonzero basis element");

  // Interreduce to a fixed point: each element is replaced by its remainder
  // modulo the others; zero remainders (redundant elements) drop out. The
  // loop terminates because an element's leading monomial only ever moves
  // down the well-order, and once the leading monomials stop changing one
  // sweep leaves every fully reduced element alone.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size();) {
      if (work.size() == 1) break;
      std::vector<Polynomial> others;
      others.reserve(work.size() - 1);
      for (std::size_t j = 0; j < work.size(); ++j)
        if (j != i) others.push_back(work[j]);
      Polynomial r = multivariate_divide(work[i], others, ord).remainder;
      if (r.is_zero()) {
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        continue;
      }
      r = monic(r);
      if (r != work[i]) {
        work[i] = std::move(r);
        changed = true;
      }
      ++i;
    }
  }

  // At the fixed point leading monomials are pairwise non-divisible, hence
  // distinct, so sorting by them is strict.
  std::sort(work.begin(), work.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return compare(leading_monomial(a, ord),
                             leading_monomial(b, ord), ord) < 0;
            });
  return work;
}

}  // namespace gbprime
