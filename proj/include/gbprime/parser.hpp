#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbprime/errors.hpp"
#include "gbprime/monomial.hpp"
#include "gbprime/polynomial.hpp"

namespace gbprime {

/// A parsed polynomial system: variable count from the "vars: <n>" header
/// plus one polynomial per non-empty, non-comment line.
struct SystemFile {
  std::size_t num_vars = 0;
  std::vector<Polynomial> polynomials;
};

namespace detail {

// Recursive-descent parser. Grammar, loosest binding first:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' nonneg-integer)?
//   atom   := integer ('/' integer)? | 'x' index | '(' expr ')'
// Whitespace is insignificant; '*' is required between factors; '/' only
// forms rational literals.
class PolynomialParser {
public:
  PolynomialParser(std::string_view src, const VarContext& ctx)
      : src_(src), ctx_(ctx) {}

  Polynomial parse() {
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", pos_);
    Polynomial result = parse_expr();
    skip_ws();
    if (!eof())
      throw ParseError(std::string("unexpected character '") + peek() + "'",
                       pos_);
    return result;
  }

private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    for (;;) {
      if (accept('+'))
        acc = add(acc, parse_term());
      else if (accept('-'))
        acc = sub(acc, parse_term());
      else
        return acc;
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_unary();
    while (accept('*')) acc = mul(acc, parse_unary());
    return acc;
  }

  Polynomial parse_unary() {
    if (accept('-')) return negate(parse_unary());
    return parse_power();
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      unsigned exponent = parse_exponent();
      return pow(base, exponent, ctx_.num_vars());
    }
    return base;
  }

  unsigned parse_exponent() {
    skip_ws();
    std::size_t at = pos_;
    if (!eof() && peek() == '-')
      throw NegativeExponentError("negative exponent", at);
    Integer value = parse_integer("exponent");
    if (!value.fits_uint_p())
      throw ParseError("exponent too large", at);
    return static_cast<unsigned>(value.get_ui());
  }

  Polynomial parse_atom() {
    skip_ws();
    if (eof()) throw ParseError("unexpected end of input", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      skip_ws();
      if (eof() || peek() != ')')
        throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (c == 'x') return parse_variable();
    throw ParseError(std::string("expected a number, variable or '(', got '") +
                         c + "'",
                     pos_);
  }

  Polynomial parse_number() {
    Integer numerator = parse_integer("number");
    Rational value(numerator);
    skip_ws();
    if (!eof() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      Integer denominator = parse_integer("denominator");
      if (denominator == 0) throw ParseError("zero denominator", at);
      value = Rational(numerator, denominator);
      value.canonicalize();
    }
    return Polynomial::constant(std::move(value), ctx_.num_vars());
  }

  Polynomial parse_variable() {
    std::size_t at = pos_;
    ++pos_;  // 'x'
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a variable index after 'x'", pos_);
    Integer index = parse_integer("variable index");
    if (index >= static_cast<unsigned long>(ctx_.num_vars()))
      throw UndefinedVariableError(
          "variable x" + index.get_str() + " is outside the declared " +
              std::to_string(ctx_.num_vars()) + " variables",
          at);
    Monomial m = Monomial::variable(static_cast<std::size_t>(index.get_ui()), ctx_);
    return Polynomial({Term{Rational(1), std::move(m)}});
  }

  Integer parse_integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start)
      throw ParseError(std::string("expected ") + what, start);
    return Integer(std::string(src_.substr(start, pos_ - start)), 10);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  const VarContext& ctx_;
};

inline std::string strip_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::size_t begin = 0, end = line.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(line[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1])))
    --end;
  return std::string(line.substr(begin, end - begin));
}

}  // namespace detail

/// Parses one polynomial. Products and powers are expanded, so the result is
/// in canonical form.
inline Polynomial parse_polynomial(std::string_view text,
                                   const VarContext& ctx) {
  return detail::PolynomialParser(text, ctx).parse();
}

/// Parses a whole system: a "vars: <n>" header line, then one polynomial per
/// line. '#' starts a comment; blank lines are skipped; CRLF is accepted.
inline SystemFile parse_system(std::string_view content) {
  SystemFile file;
  bool have_header = false;
  VarContext ctx(1);  // replaced once the header is read
  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= content.size()) {
    std::size_t nl = content.find('\n', cursor);
    std::string_view raw = content.substr(
        cursor, nl == std::string_view::npos ? content.size() - cursor
                                             : nl - cursor);
    cursor = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;
    std::string line = detail::strip_line(raw);
    if (line.empty()) continue;

    if (!have_header) {
      constexpr std::string_view kPrefix = "vars:";
      if (!line.starts_with(kPrefix))
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected header \"vars: <n>\"",
                         0);
      std::string count = detail::strip_line(line.substr(kPrefix.size()));
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoul(count, &used);
        if (used != count.size()) n = 0;
      } catch (const std::exception&) {
        n = 0;
      }
      if (n == 0)
        throw ParseError("line " + std::to_string(line_no) +
                             ": invalid variable count \"" + count + "\"",
                         0);
      file.num_vars = n;
      ctx = VarContext(n);
      have_header = true;
      continue;
    }

    try {
      file.polynomials.push_back(parse_polynomial(line, ctx));
    } catch (const UndefinedVariableError& e) {
      throw UndefinedVariableError(
          "line " + std::to_string(line_no) + ": " + e.what(), e.position());
    } catch (const NegativeExponentError& e) {
      throw NegativeExponentError(
          "line " + std::to_string(line_no) + ": " + e.what(), e.position());
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       e.position());
    }
  }
  if (!have_header)
    throw ParseError("missing \"vars: <n>\" header", 0);
  if (file.polynomials.empty())
    throw ParseError("no polynomials after the header", 0);
  return file;
}

}  // namespace gbprime
