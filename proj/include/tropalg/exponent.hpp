#pragma once

#include "tropalg/errors.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tropalg {

/// Exponent vector of a monomial; its length is the ambient arity.
class Exponent {
 public:
  Exponent() = default;
  Exponent(std::initializer_list<std::uint32_t> e) : e_(e) {}
  explicit Exponent(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static Exponent zeros(std::size_t arity) { return Exponent(std::vector<std::uint32_t>(arity, 0)); }
  static Exponent unit(std::size_t arity, std::size_t i) {
    auto e = zeros(arity);
    e.e_.at(i) = 1;
    return e;
  }

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<std::uint32_t>& components() const { return e_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto v : e_) d += v;
    return d;
  }

  /// Componentwise <=.
  bool fits_in(const Exponent& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }

  /// this - other when every component stays non-negative.
  std::optional<Exponent> minus(const Exponent& other) const {
    if (!other.fits_in(*this)) return std::nullopt;
    Exponent d = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) d.e_[i] -= other.e_[i];
    return d;
  }

  Exponent scaled(std::uint32_t k) const {
    Exponent s = *this;
    for (auto& v : s.e_) v *= k;
    return s;
  }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw UsageError("exponent arity mismatch");
    Exponent s = a;
    for (std::size_t i = 0; i < s.e_.size(); ++i) s.e_[i] += b.e_[i];
    return s;
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent& a, const Exponent& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

inline std::string to_string(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << to_string(e); }

}  // namespace tropalg
