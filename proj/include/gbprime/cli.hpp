#pragma once

#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbprime/buchberger.hpp"
#include "gbprime/division.hpp"
#include "gbprime/errors.hpp"
#include "gbprime/oracle.hpp"
#include "gbprime/ordering.hpp"
#include "gbprime/parser.hpp"
#include "gbprime/spoly.hpp"

namespace gbprime::cli {

/// Exit codes. Inconsistency is a distinct success code so scripts can
/// branch on solvability.
enum ExitCode {
  kOk = 0,
  kUsageOrParseError = 1,
  kPassLimitExceeded = 2,
  kInconsistent = 3,
};

namespace detail {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string order = "prime";
  std::string profile = "conservative";
  std::string mode = "paper";
  unsigned max_passes = 64;
  bool reduced = false;
  bool json = false;
  bool trace = false;
  bool check = false;
};

inline SystemFile load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

inline BuchbergerConfig make_config(const Options& opt, bool order_given,
                                    std::ostream& err) {
  MonomialOrder order = *MonomialOrder::from_name(opt.order);
  BuchbergerConfig cfg;
  if (opt.profile == "paper") {
    if (order_given && order.kind() != OrderKind::PrimeEncoded)
      throw Error("--profile paper fixes --order prime");
    cfg = BuchbergerConfig::paper_faithful();
  } else {
    cfg = BuchbergerConfig::conservative(order);
  }
  cfg.max_passes = opt.max_passes;
  if (opt.trace) cfg.trace = &err;
  return cfg;
}

inline Json report_json(const BasisReport& report,
                        const std::vector<Polynomial>& basis) {
  Json doc;
  doc["order"] = std::string(report.config.order.name());
  doc["profile"] = std::string(profile_name(report.config.profile));
  doc["passes"] = report.passes;
  doc["contradiction"] = report.contradiction;
  doc["verdict"] = std::string(verdict_name(report.verdict));
  Json rendered = Json::array();
  for (const Polynomial& g : basis) rendered.push_back(render_polynomial(g));
  doc["basis"] = rendered;
  return doc;
}

inline int run_gb(const Options& opt, bool order_given, std::ostream& out,
                  std::ostream& err) {
  SystemFile system = load_system(opt.file);
  BuchbergerConfig cfg = make_config(opt, order_given, err);
  if (opt.reduced && cfg.profile != Profile::Conservative)
    throw Error("--reduced requires the conservative profile");
  BasisReport report = buchberger(system.polynomials, cfg);
  std::vector<Polynomial> basis =
      opt.reduced ? reduce_basis(report.basis, cfg.order) : report.basis;
  if (opt.json) {
    out << report_json(report, basis).dump(2) << '\n';
  } else {
    for (const Polynomial& g : basis) out << g << '\n';
  }
  return report.verdict == Verdict::Inconsistent ? kInconsistent : kOk;
}

inline int run_solvable(const Options& opt, bool order_given,
                        std::ostream& out, std::ostream& err) {
  SystemFile system = load_system(opt.file);
  BuchbergerConfig cfg = make_config(opt, order_given, err);
  BasisReport report = buchberger(system.polynomials, cfg);

  std::optional<std::size_t> oracle_solutions;
  std::string check_note;
  if (opt.check) {
    VarContext ctx(system.num_vars);
    if (system.num_vars > 20) {
      check_note = "skipped (more than 20 variables)";
    } else if (!has_all_field_equations(system.polynomials, ctx)) {
      check_note = "skipped (field equations x_i^2 - x_i not all present)";
    } else {
      std::size_t count =
          boolean_solutions(system.polynomials, ctx).size();
      oracle_solutions = count;
      bool agrees =
          (count == 0) == (report.verdict == Verdict::Inconsistent);
      check_note = "oracle found " + std::to_string(count) +
                   " boolean solution(s); verdict " +
                   (agrees ? "agrees" : "DISAGREES");
    }
  }

  if (opt.json) {
    Json doc = report_json(report, report.basis);
    if (opt.check) {
      Json check;
      check["ran"] = oracle_solutions.has_value();
      if (oracle_solutions) check["solutions"] = *oracle_solutions;
      check["note"] = check_note;
      doc["check"] = check;
    }
    out << doc.dump(2) << '\n';
  } else {
    out << verdict_name(report.verdict) << '\n';
    if (opt.check) out << "check: " << check_note << '\n';
  }
  return report.verdict == Verdict::Inconsistent ? kInconsistent : kOk;
}

inline int run_divide(const Options& opt, std::ostream& out) {
  SystemFile system = load_system(opt.file);
  if (system.polynomials.size() < 2)
    throw Error("divide needs a dividend line and at least one divisor line");
  MonomialOrder order = *MonomialOrder::from_name(opt.order);
  Polynomial f = system.polynomials.front();
  std::vector<Polynomial> divisors(system.polynomials.begin() + 1,
                                   system.polynomials.end());
  DivisionResult result = multivariate_divide(f, divisors, order);
  if (opt.json) {
    Json doc;
    doc["order"] = opt.order;
    Json quotients = Json::array();
    for (const Polynomial& q : result.quotients)
      quotients.push_back(render_polynomial(q));
    doc["quotients"] = quotients;
    doc["remainder"] = render_polynomial(result.remainder);
    out << doc.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < result.quotients.size(); ++i)
      out << "quotient[" << i << "] = " << result.quotients[i] << '\n';
    out << "remainder = " << result.remainder << '\n';
  }
  return kOk;
}

inline int run_spoly(const Options& opt, std::ostream& out) {
  SystemFile system = load_system(opt.file);
  MonomialOrder order = *MonomialOrder::from_name(opt.order);
  for (const Polynomial& f : system.polynomials)
    if (f.is_zero()) throw Error("spoly requires nonzero polynomials");
  std::vector<Polynomial> spolys =
      all_s_polynomials(system.polynomials, order);
  if (opt.json) {
    Json doc;
    doc["order"] = opt.order;
    Json list = Json::array();
    for (const Polynomial& s : spolys) list.push_back(render_polynomial(s));
    doc["s_polynomials"] = list;
    out << doc.dump(2) << '\n';
  } else {
    for (const Polynomial& s : spolys) out << s << '\n';
  }
  return kOk;
}

inline int run_reduce(const Options& opt, std::ostream& out) {
  SystemFile system = load_system(opt.file);
  ReductionMode mode =
      opt.mode == "off" ? ReductionMode::Off : ReductionMode::Paper;
  if (opt.json) {
    Json doc;
    doc["mode"] = opt.mode;
    Json list = Json::array();
    for (const Polynomial& f : system.polynomials)
      list.push_back(render_polynomial(reduce_polynomial(f, mode)));
    doc["reduced"] = list;
    out << doc.dump(2) << '\n';
  } else {
    for (const Polynomial& f : system.polynomials)
      out << reduce_polynomial(f, mode) << '\n';
  }
  return kOk;
}

inline int run_leading_term(const Options& opt, std::ostream& out) {
  SystemFile system = load_system(opt.file);
  MonomialOrder order = *MonomialOrder::from_name(opt.order);
  if (opt.json) {
    Json doc;
    doc["order"] = opt.order;
    Json list = Json::array();
    for (const Polynomial& f : system.polynomials)
      list.push_back(render_term(leading_term(f, order)));
    doc["leading_terms"] = list;
    out << doc.dump(2) << '\n';
  } else {
    for (const Polynomial& f : system.polynomials)
      out << render_term(leading_term(f, order)) << '\n';
  }
  return kOk;
}

}  // namespace detail

/// Runs the command line given argv-style arguments (program name excluded).
/// All regular results go to `out`, errors and --trace events to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  detail::Options opt;

  CLI::App app{"Groebner basis computation over exact rationals", "gbprime"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool with_run_flags) {
    cmd->add_option("file", opt.file, "polynomial system file")->required();
    cmd->add_option("--order", opt.order, "monomial order")
        ->check(CLI::IsMember({"prime", "lex", "grlex"}))
        ->capture_default_str();
    cmd->add_flag("--json", opt.json, "emit a JSON report");
    if (with_run_flags) {
      cmd->add_option("--profile", opt.profile, "algorithm profile")
          ->check(CLI::IsMember({"paper", "conservative"}))
          ->capture_default_str();
      cmd->add_option("--max-passes", opt.max_passes,
                      "abort after this many passes")
          ->capture_default_str();
      cmd->add_flag("--trace", opt.trace, "per-pass event log on stderr");
    }
  };

  CLI::App* gb = app.add_subcommand("gb", "compute a Groebner basis");
  add_common(gb, true);
  gb->add_flag("--reduced", opt.reduced,
               "emit the reduced basis (conservative profile only)");

  CLI::App* solvable =
      app.add_subcommand("solvable", "decide whether the system is solvable");
  add_common(solvable, true);
  solvable->add_flag("--check", opt.check,
                     "cross-check against the boolean brute-force oracle");

  CLI::App* divide = app.add_subcommand(
      "divide", "divide the first polynomial by the remaining ones");
  add_common(divide, false);

  CLI::App* spoly = app.add_subcommand(
      "spoly", "print all pairwise S-polynomials in (i, j) order");
  add_common(spoly, false);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "apply the monomial-content reduction to each polynomial");
  reduce->add_option("file", opt.file, "polynomial system file")->required();
  reduce->add_option("--mode", opt.mode, "reduction mode")
      ->check(CLI::IsMember({"paper", "off"}))
      ->capture_default_str();
  reduce->add_flag("--json", opt.json, "emit a JSON report");

  CLI::App* leading = app.add_subcommand(
      "leading-term", "print the leading term of each polynomial");
  add_common(leading, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParseError;
  }

  try {
    const bool order_given = gb->count("--order") > 0 ||
                             solvable->count("--order") > 0;
    if (gb->parsed()) return detail::run_gb(opt, order_given, out, err);
    if (solvable->parsed())
      return detail::run_solvable(opt, order_given, out, err);
    if (divide->parsed()) return detail::run_divide(opt, out);
    if (spoly->parsed()) return detail::run_spoly(opt, out);
    if (reduce->parsed()) return detail::run_reduce(opt, out);
    if (leading->parsed()) return detail::run_leading_term(opt, out);
    err << "error: no subcommand\n";
    return kUsageOrParseError;
  } catch (const PassLimitExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kPassLimitExceeded;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageOrParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParseError;
  }
}

}  // namespace gbprime::cli
