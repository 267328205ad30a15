#pragma once

// Reference implementations used only to check the library. They are slow
// and share no code with it beyond the number and polynomial types.

#include "tropalg/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace tropalg::oracle {

using Row = std::vector<Rational>;

/// Unique solution of A x = b (A is m x k), nullopt if none or not unique.
inline std::optional<Row> solve_unique(std::vector<Row> a, Row b) {
  const std::size_t m = a.size();
  const std::size_t k = m ? a[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) a[i].push_back(b[i]);
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) return std::nullopt;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (a[i][k] != 0) return std::nullopt;
  }
  Row x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = a[i][k] / a[i][i];
  return x;
}

template <class F>
void subsets(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

using Terms = std::vector<std::pair<Exponent, Rational>>;

inline Terms terms_of(const Polynomial& p) {
  Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace_back(e, c.value());
  return t;
}

/// Concave envelope of the lifted points at g: the best convex combination,
/// which by Caratheodory can be searched over affinely independent subsets.
inline std::optional<Rational> envelope(const Terms& terms, const Exponent& g) {
  if (terms.empty()) return std::nullopt;
  const std::size_t n = g.size();
  std::optional<Rational> best;
  for (std::size_t m = 1; m <= std::min(n + 1, terms.size()); ++m) {
    subsets(terms.size(), m, [&](const std::vector<std::size_t>& s) {
      std::vector<Row> a(n + 1, Row(m));
      Row b(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = Rational(terms[s[j]].first[i]);
        b[i] = Rational(g[i]);
      }
      for (std::size_t j = 0; j < m; ++j) a[n][j] = 1;
      b[n] = 1;
      auto mu = solve_unique(a, b);
      if (!mu) return;
      Rational v = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if ((*mu)[j] < 0) return;
        v += (*mu)[j] * terms[s[j]].second;
      }
      if (!best || v > *best) best = v;
    });
  }
  return best;
}

/// p <= q pointwise as functions on Q^n.
inline bool function_leq(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return true;
  if (q.is_zero()) return false;
  Terms qt = terms_of(q);
  for (const auto& [e, c] : p.terms()) {
    auto env = envelope(qt, e);
    if (!env || c.value() > *env) return false;
  }
  return true;
}

inline bool function_equal(const Polynomial& p, const Polynomial& q) {
  return function_leq(p, q) && function_leq(q, p);
}

/// Whether the term at e is a vertex of the lifted concave envelope.
inline bool is_extremal(const Polynomial& p, const Exponent& e) {
  Terms rest;
  for (const auto& [f, c] : p.terms()) {
    if (f != e) rest.emplace_back(f, c.value());
  }
  auto env = envelope(rest, e);
  return !env || p.coefficient(e).value() > *env;
}

/// Zero test through an orthogonal decomposition P = P1 + P2 with
/// P1(x) = P2(x), by brute force over the support splits.
inline bool zero_by_decomposition(const Polynomial& p, const PointK& x) {
  std::vector<MaxPlus> values;
  for (const auto& [e, c] : p.terms()) values.push_back(term_value(e, c, x));
  const std::size_t k = values.size();
  if (k == 0) return true;
  MaxPlus total = MaxPlus::zero();
  for (const auto& v : values) total = total + v;
  if (total.is_zero()) return true;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    MaxPlus a = MaxPlus::zero(), b = MaxPlus::zero();
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) {
        a = a + values[i];
      } else {
        b = b + values[i];
      }
    }
    if (a == b) return true;
  }
  return false;
}

struct LinearConstraint {
  Row a;
  Rational b;
  bool equality;  // a.x == b, otherwise a.x <= b
};

/// max c.x over a bounded, nonempty polyhedron by trying every n-subset of
/// constraints as the active set. nullopt when no vertex is feasible.
inline std::optional<Rational> lp_max(const Row& c, const std::vector<LinearConstraint>& cons) {
  const std::size_t n = c.size();
  std::optional<Rational> best;
  subsets(cons.size(), n, [&](const std::vector<std::size_t>& s) {
    std::vector<Row> a;
    Row b;
    for (auto i : s) {
      a.push_back(cons[i].a);
      b.push_back(cons[i].b);
    }
    auto x = solve_unique(a, b);
    if (!x) return;
    for (const auto& k : cons) {
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += k.a[j] * (*x)[j];
      if (k.equality ? v != k.b : v > k.b) return;
    }
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
    if (!best || v > *best) best = v;
  });
  return best;
}

/// Whether some R gives Q R equal to P as functions: build the greatest R
/// with Q R <= P over every lattice point of a box, then compare.
inline bool divides(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return true;
  const std::size_t n = p.arity();
  Terms pt = terms_of(p);
  Exponent hi = Exponent::zeros(n);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(hi[i], e[i]);
  }
  Polynomial r(n);
  Exponent b = Exponent::zeros(n);
  while (true) {
    std::optional<Rational> best;
    bool ok = true;
    for (const auto& [a, ca] : q.terms()) {
      auto env = envelope(pt, a + b);
      if (!env) {
        ok = false;
        break;
      }
      Rational bound = *env - ca.value();
      if (!best || bound < *best) best = bound;
    }
    if (ok) r.add_term(b, MaxPlus(*best));
    std::size_t i = 0;
    while (i < n && b[i] == hi[i]) b[i++] = 0;
    if (i == n) break;
    ++b[i];
  }
  return !r.is_zero() && function_equal(q * r, p);
}

}  // namespace tropalg::oracle
