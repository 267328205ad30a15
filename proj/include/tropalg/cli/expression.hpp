#pragma once

// Text syntax for polynomials:
//
//   expr    := term ('+' term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' natural)?
//   primary := number | '-inf' | variable | '(' expr ')'
//
// '+' is max and '*' is addition of log values. Variables are x, y, z (X, Y, Z
// accepted) or indexed X1, X2, ... (x1, x2, ...); one expression may not mix
// the two families.

#include "tropalg/errors.hpp"
#include "tropalg/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropalg::cli {

class ParseError : public UsageError {
 public:
  ParseError(std::size_t column, const std::string& message);
  /// 1-based position in the input text.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

enum class Convention {
  LogDomain,  // numbers are log values
  Classical,  // numbers are positive reals under (max, times), read as logs to a base
};

struct ParseOptions {
  Convention convention = Convention::LogDomain;
  Rational base = 10;
};

struct Expression {
  enum class Kind { Number, Bottom, Variable, Sum, Product, Power };

  Kind kind;
  Rational value;             // Number
  std::size_t variable = 0;   // Variable
  unsigned exponent = 0;      // Power
  std::vector<Expression> children;
};

Expression parse_expression(std::string_view text, const ParseOptions& options = {});

/// Number of variables the expression needs (highest index + 1).
std::size_t arity_of(const Expression& e);

/// Expands the expression in `arity` variables; arity must cover every
/// variable used.
Polynomial to_polynomial(const Expression& e, std::size_t arity);

/// parse_expression + to_polynomial; arity 0 means "as many as used, at least 1".
Polynomial parse_polynomial(std::string_view text, std::size_t arity = 0,
                            const ParseOptions& options = {});

/// log_base(c) when it is rational with denominator at most 64.
std::optional<Rational> rational_log(const Rational& c, const Rational& base);

}  // namespace tropalg::cli
