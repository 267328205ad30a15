#include "tropalg/semifield.hpp"

namespace tropalg {

const Rational& MaxPlus::value() const {
  if (!value_) throw DomainError("bottom element has no finite value");
  return *value_;
}

MaxPlus MaxPlus::inv() const {
  if (!value_) throw DomainError("zero has no inverse");
  return MaxPlus(Rational(-*value_));
}

MaxPlus MaxPlus::pow(unsigned n) const {
  if (n == 0) return one();
  if (!value_) return MaxPlus();
  return MaxPlus(Rational(*value_ * n));
}

MaxPlus operator+(const MaxPlus& a, const MaxPlus& b) { return a < b ? b : a; }

MaxPlus operator*(const MaxPlus& a, const MaxPlus& b) {
  if (!a.value_ || !b.value_) return MaxPlus();
  return MaxPlus(Rational(*a.value_ + *b.value_));
}

std::strong_ordering operator<=>(const MaxPlus& a, const MaxPlus& b) {
  if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
  if (*a.value_ < *b.value_) return std::strong_ordering::less;
  if (*b.value_ < *a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const MaxPlus& a) { return a.is_bottom() ? "-inf" : to_string(a.value()); }

std::string to_string(BoolF1 a) { return a.value() ? "1" : "0"; }

std::ostream& operator<<(std::ostream& os, const MaxPlus& a) { return os << to_string(a); }

std::ostream& operator<<(std::ostream& os, BoolF1 a) { return os << to_string(a); }

}  // namespace tropalg
