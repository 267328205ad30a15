#include "tropalg/rational.hpp"

#include "tropalg/errors.hpp"

#include <cctype>

namespace tropalg {

std::string to_string(const Rational& q) { return q.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw UsageError("malformed rational '" + std::string(text) + "'");
    }
    Integer d{std::string(den)};
    if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw UsageError("malformed decimal '" + std::string(text) + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw UsageError("malformed number '" + std::string(text) + "'");
    value = Rational(Integer(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

Rational numerator_of(const Rational& q) { return Rational(boost::multiprecision::numerator(q)); }

Rational denominator_of(const Rational& q) {
  return Rational(boost::multiprecision::denominator(q));
}

std::string to_fixed(const Rational& q, unsigned digits) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  bool negative = num < 0;
  if (negative) num = -num;
  // round(|q| * scale) with ties away from zero
  Integer scaled = (2 * num * scale + den) / (2 * den);
  std::string body = scaled.str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  if (negative && scaled != 0) body.insert(0, "-");
  return body;
}

}  // namespace tropalg
