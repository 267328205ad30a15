#include "tropalg/cli/expression.hpp"

#include <cctype>

namespace tropalg::cli {

ParseError::ParseError(std::size_t column, const std::string& message)
    : UsageError("parse error at column " + std::to_string(column) + ": " + message), column_(column) {}

std::optional<Rational> rational_log(const Rational& c, const Rational& base) {
  if (c <= 0 || base <= 0 || base == 1) return std::nullopt;
  const bool flip_base = base < 1;
  const Rational b = flip_base ? Rational(1 / base) : base;
  Rational power = 1;
  for (unsigned q = 1; q <= 64; ++q) {
    power *= c;
    // b^p == c^q for an integer p?
    const bool flip_target = power < 1;
    const Rational target = flip_target ? Rational(1 / power) : power;
    Rational acc = 1;
    long p = 0;
    while (acc < target && p < 100000) {
      acc *= b;
      ++p;
    }
    if (acc == target) {
      Rational r(p, q);
      if (flip_target) r = -r;
      if (flip_base) r = -r;
      return r;
    }
  }
  return std::nullopt;
}

namespace {

enum class Family { None, Letters, Indexed };

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  Expression parse() {
    Expression e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.');
  }

  Expression expr() {
    Expression first = term();
    if (!peek('+')) return first;
    Expression sum{Expression::Kind::Sum, {}, 0, 0, {}};
    sum.children.push_back(std::move(first));
    while (accept('+')) sum.children.push_back(term());
    return sum;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Expression term() {
    Expression first = factor();
    if (!peek('*')) return first;
    Expression product{Expression::Kind::Product, {}, 0, 0, {}};
    product.children.push_back(std::move(first));
    while (accept('*')) product.children.push_back(factor());
    return product;
  }

  Expression factor() {
    Expression base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/'))) {
      pos_ = start;
      fail("exponent must be a natural number");
    }
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) {
      pos_ = start;
      fail("exponent too large");
    }
    Expression power{Expression::Kind::Power, {}, 0, static_cast<unsigned>(std::stoul(digits)), {}};
    power.children.push_back(std::move(base));
    return power;
  }

  Expression primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      std::size_t start = pos_;
      ++pos_;
      if (text_.substr(pos_, 3) == "inf") {
        pos_ += 3;
        return bottom(start);
      }
      if (!at_digit()) fail("expected a number after '-'");
      return number(start, true);
    }
    if (at_digit()) return number(pos_, false);
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expression bottom(std::size_t start) {
    if (options_.convention == Convention::Classical) {
      pos_ = start;
      fail("-inf is not a classical coefficient; write 0 instead");
    }
    return {Expression::Kind::Bottom, {}, 0, 0, {}};
  }

  Expression number(std::size_t start, bool negative) {
    std::size_t body = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '/')) {
      ++pos_;
    }
    Rational v;
    try {
      v = parse_rational(text_.substr(body, pos_ - body));
    } catch (const UsageError&) {
      std::size_t end = pos_;
      pos_ = start;
      fail("malformed number '" + std::string(text_.substr(start, end - start)) + "'");
    }
    if (negative) v = -v;
    if (options_.convention == Convention::Classical) {
      if (v == 0) return {Expression::Kind::Bottom, {}, 0, 0, {}};
      if (v < 0) {
        pos_ = start;
        fail("classical coefficients must be non-negative");
      }
      auto log = rational_log(v, options_.base);
      if (!log) {
        pos_ = start;
        fail("coefficient is not a rational power of the base " + to_string(options_.base));
      }
      v = *log;
    }
    return {Expression::Kind::Number, v, 0, 0, {}};
  }

  Expression variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    Family family = Family::None;
    std::size_t index = 0;
    if (name.size() == 1 && std::string("xyzXYZ").find(name[0]) != std::string::npos) {
      family = Family::Letters;
      index = static_cast<std::size_t>(std::tolower(static_cast<unsigned char>(name[0])) - 'x');
    } else if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'X') && name[1] != '0' &&
               name.find_first_not_of("0123456789", 1) == std::string::npos && name.size() <= 6) {
      family = Family::Indexed;
      index = std::stoul(name.substr(1)) - 1;
    } else {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    if (family_ != Family::None && family_ != family) {
      pos_ = start;
      fail("cannot mix x, y, z with indexed variables");
    }
    family_ = family;
    return {Expression::Kind::Variable, {}, index, 0, {}};
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  Family family_ = Family::None;
};

}  // namespace

Expression parse_expression(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).parse();
}

std::size_t arity_of(const Expression& e) {
  std::size_t n = e.kind == Expression::Kind::Variable ? e.variable + 1 : 0;
  for (const auto& c : e.children) n = std::max(n, arity_of(c));
  return n;
}

Polynomial to_polynomial(const Expression& e, std::size_t arity) {
  switch (e.kind) {
    case Expression::Kind::Number: return Polynomial::constant(arity, MaxPlus(e.value));
    case Expression::Kind::Bottom: return Polynomial(arity);
    case Expression::Kind::Variable:
      if (e.variable >= arity) throw UsageError("variable index exceeds arity");
      return Polynomial::variable(arity, e.variable);
    case Expression::Kind::Sum: {
      Polynomial p(arity);
      for (const auto& c : e.children) p = p + to_polynomial(c, arity);
      return p;
    }
    case Expression::Kind::Product: {
      Polynomial p = Polynomial::constant(arity, MaxPlus::one());
      for (const auto& c : e.children) p = p * to_polynomial(c, arity);
      return p;
    }
    case Expression::Kind::Power: return to_polynomial(e.children.front(), arity).pow(e.exponent);
  }
  throw std::logic_error("unknown expression kind");
}

Polynomial parse_polynomial(std::string_view text, std::size_t arity, const ParseOptions& options) {
  Expression e = parse_expression(text, options);
  std::size_t used = arity_of(e);
  if (arity == 0) arity = std::max<std::size_t>(used, 1);
  if (used > arity) throw UsageError("expression uses more variables than the requested arity");
  return to_polynomial(e, arity);
}

}  // namespace tropalg::cli
