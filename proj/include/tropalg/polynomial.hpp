#pragma once

#include "tropalg/exponent.hpp"
#include "tropalg/semifield.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace tropalg {

/**
 * Sparse polynomial over an idempotent semifield.
 *
 * Terms are kept in a map ordered lexicographically by exponent vector and
 * never store the zero coefficient; the empty map is the zero polynomial.
 */
template <IdempotentSemifield K>
class BasicPolynomial {
 public:
  using Coefficient = K;
  using Terms = std::map<Exponent, K>;
  using Point = std::vector<K>;

  explicit BasicPolynomial(std::size_t arity = 1) : arity_(arity) {}

  BasicPolynomial(std::size_t arity, std::initializer_list<std::pair<Exponent, K>> terms)
      : arity_(arity) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static BasicPolynomial monomial(const K& c, const Exponent& e) {
    BasicPolynomial p(e.size());
    p.add_term(e, c);
    return p;
  }
  static BasicPolynomial constant(std::size_t arity, const K& c) {
    return monomial(c, Exponent::zeros(arity));
  }
  static BasicPolynomial variable(std::size_t arity, std::size_t i) {
    return monomial(K::one(), Exponent::unit(arity, i));
  }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  K coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K::zero() : it->second;
  }

  /// Accumulates c into the coefficient of X^e with the semifield addition.
  void add_term(const Exponent& e, const K& c) {
    if (e.size() != arity_) throw UsageError("exponent arity does not match polynomial arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second = it->second + c;
  }

  /// Total degree; nullopt for the zero polynomial.
  std::optional<std::uint64_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
    return d;
  }

  /// Smallest total degree over the support; nullopt for the zero polynomial.
  std::optional<std::uint64_t> valuation() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t v = terms_.begin()->first.total_degree();
    for (const auto& [e, c] : terms_) v = std::min(v, e.total_degree());
    return v;
  }

  K operator()(std::span<const K> x) const;

  friend BasicPolynomial operator+(const BasicPolynomial& p, const BasicPolynomial& q) {
    check_arity(p, q);
    BasicPolynomial r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
  }

  friend BasicPolynomial operator*(const BasicPolynomial& p, const BasicPolynomial& q) {
    check_arity(p, q);
    BasicPolynomial r(p.arity_);
    for (const auto& [a, ca] : p.terms_) {
      for (const auto& [b, cb] : q.terms_) r.add_term(a + b, ca * cb);
    }
    return r;
  }

  friend BasicPolynomial operator*(const K& c, const BasicPolynomial& p) {
    BasicPolynomial r(p.arity_);
    for (const auto& [e, v] : p.terms_) r.add_term(e, c * v);
    return r;
  }

  BasicPolynomial pow(unsigned k) const {
    BasicPolynomial result = constant(arity_, K::one());
    BasicPolynomial base = *this;
    while (k > 0) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  static void check_arity(const BasicPolynomial& p, const BasicPolynomial& q) {
    if (p.arity_ != q.arity_) throw UsageError("polynomial arity mismatch");
  }

  std::size_t arity_;
  Terms terms_;
};

using Polynomial = BasicPolynomial<MaxPlus>;
using PointK = std::vector<MaxPlus>;

/// Value of a single term c X^e at x. x_i^0 is the unit even when x_i is zero.
template <IdempotentSemifield K>
K term_value(const Exponent& e, const K& c, std::type_identity_t<std::span<const K>> x) {
  K v = c;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) v = v * pow(x[i], e[i]);
  }
  return v;
}

template <IdempotentSemifield K>
K BasicPolynomial<K>::operator()(std::span<const K> x) const {
  if (x.size() != arity_) throw UsageError("point arity does not match polynomial arity");
  K v = K::zero();
  for (const auto& [e, c] : terms_) v = v + term_value(e, c, x);
  return v;
}

template <IdempotentSemifield K>
BasicPolynomial<K> poly_add(const BasicPolynomial<K>& p, const BasicPolynomial<K>& q) { return p + q; }

template <IdempotentSemifield K>
BasicPolynomial<K> poly_mul(const BasicPolynomial<K>& p, const BasicPolynomial<K>& q) { return p * q; }

template <IdempotentSemifield K>
BasicPolynomial<K> poly_pow(const BasicPolynomial<K>& p, unsigned k) { return p.pow(k); }

template <IdempotentSemifield K>
BasicPolynomial<K> scalar_mul(const K& c, const BasicPolynomial<K>& p) { return c * p; }

template <IdempotentSemifield K>
K eval(const BasicPolynomial<K>& p, std::type_identity_t<std::span<const K>> x) { return p(x); }

/**
 * Tropical zero test: x is a zero of P iff P(x) is the zero element or at
 * least two distinct monomials attain P(x). Over a totally ordered
 * characteristic-1 semifield this is the same as P splitting into two
 * disjoint-support parts with equal values at x.
 */
template <IdempotentSemifield K>
bool is_zero_of(const BasicPolynomial<K>& p, std::type_identity_t<std::span<const K>> x) {
  if (x.size() != p.arity()) throw UsageError("point arity does not match polynomial arity");
  K best = K::zero();
  int attained = 0;
  for (const auto& [e, c] : p.terms()) {
    K v = term_value(e, c, x);
    if (best < v) {
      best = v;
      attained = 1;
    } else if (v == best) {
      ++attained;
    }
  }
  return best.is_zero() || attained >= 2;
}

/// d/dX_i in characteristic 1: exponents shift down, coefficients are kept.
template <IdempotentSemifield K>
BasicPolynomial<K> derivative(const BasicPolynomial<K>& p, std::size_t i) {
  if (i >= p.arity()) throw UsageError("variable index out of range");
  BasicPolynomial<K> d(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent shifted = e;
    shifted[i] -= 1;
    d.add_term(shifted, c);
  }
  return d;
}

/// Orthogonality in the free module: disjoint supports.
template <IdempotentSemifield K>
bool orthogonal(const BasicPolynomial<K>& p, const BasicPolynomial<K>& q) {
  if (p.arity() != q.arity()) throw UsageError("polynomial arity mismatch");
  for (const auto& [e, c] : p.terms()) {
    if (q.terms().contains(e)) return false;
  }
  return true;
}

/// Names used for printing: x, y, z for arity <= 3, X1..Xn otherwise.
inline std::string variable_name(std::size_t arity, std::size_t i) {
  if (arity <= 3) return std::string(1, static_cast<char>('x' + i));
  return "X" + std::to_string(i + 1);
}

/// Text form accepted back by the expression parser, highest exponent first.
template <IdempotentSemifield K>
std::string to_string(const BasicPolynomial<K>& p) {
  if (p.is_zero()) return "-inf";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string term;
    bool constant = e.total_degree() == 0;
    if (constant || !(c == K::one())) term = to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!term.empty()) term += "*";
      term += variable_name(p.arity(), i);
      if (e[i] > 1) term += "^" + std::to_string(e[i]);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

template <IdempotentSemifield K>
std::ostream& operator<<(std::ostream& os, const BasicPolynomial<K>& p) { return os << to_string(p); }

}  // namespace tropalg
