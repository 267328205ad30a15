#include "tropalg/envelope.hpp"

#include "tropalg/errors.hpp"
#include "tropalg/linalg.hpp"

#include <algorithm>
#include <set>

namespace tropalg {

namespace {

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational affine(const std::vector<Rational>& coeffs, const std::vector<Rational>& q) {
  Rational v = coeffs.back();
  for (std::size_t i = 0; i < q.size(); ++i) v += coeffs[i] * q[i];
  return v;
}

void normalize(std::vector<Rational>& v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (lead == v.end()) return;
  Rational s = abs(*lead);
  for (auto& x : v) x /= s;
}

}  // namespace

Envelope::Envelope(std::vector<std::pair<Exponent, Rational>> points) {
  if (points.empty()) throw UsageError("envelope of an empty support");
  origin_ = points.front().first;
  lo_ = hi_ = origin_;
  const std::size_t n = origin_.size();
  for (const auto& [e, c] : points) {
    if (e.size() != n) throw UsageError("exponent arity mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      lo_[i] = std::min(lo_[i], e[i]);
      hi_[i] = std::max(hi_[i], e[i]);
    }
  }

  for (const auto& [e, c] : points) {
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rational(e[i]) - Rational(origin_[i]);
    basis_.push_back(std::move(row));
  }
  pivots_ = linalg::row_reduce(basis_);
  basis_.resize(pivots_.size());
  const std::size_t d = pivots_.size();

  std::vector<std::vector<Rational>> q;
  std::vector<Rational> c;
  for (const auto& [e, v] : points) {
    q.push_back(*project(e));
    c.push_back(v);
  }
  const std::size_t k = q.size();

  std::set<std::vector<Rational>> facets;
  if (d > 0) {
    for_each_subset(k, d, [&](const std::vector<std::size_t>& s) {
      linalg::Matrix rows;
      for (std::size_t i = 1; i < s.size(); ++i) {
        std::vector<Rational> r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = q[s[i]][j] - q[s[0]][j];
        rows.push_back(std::move(r));
      }
      auto normals = linalg::nullspace(rows, d);
      if (normals.size() != 1) return;
      std::vector<Rational> h = normals.front();
      h.push_back(-linalg::dot(normals.front(), q[s[0]]));
      bool nonneg = true, nonpos = true;
      for (const auto& p : q) {
        Rational v = affine(h, p);
        if (v < 0) nonneg = false;
        if (v > 0) nonpos = false;
      }
      if (!nonneg && !nonpos) return;
      if (!nonneg) {
        for (auto& x : h) x = -x;
      }
      normalize(h);
      facets.insert(std::move(h));
    });
  }
  facets_.assign(facets.begin(), facets.end());

  std::set<std::vector<Rational>> planes;
  for_each_subset(k, d + 1, [&](const std::vector<std::size_t>& s) {
    linalg::Matrix a;
    linalg::Vector b;
    for (auto i : s) {
      std::vector<Rational> r = q[i];
      r.push_back(Rational(1));
      a.push_back(std::move(r));
      b.push_back(c[i]);
    }
    auto w = linalg::solve(std::move(a), std::move(b));
    if (!w) return;
    for (std::size_t j = 0; j < k; ++j) {
      if (affine(*w, q[j]) < c[j]) return;
    }
    planes.insert(std::move(*w));
  });
  planes_.assign(planes.begin(), planes.end());
}

std::optional<std::vector<Rational>> Envelope::project(const Exponent& g) const {
  const std::size_t n = origin_.size();
  if (g.size() != n) throw UsageError("exponent arity mismatch");
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational(g[i]) - Rational(origin_[i]);
  std::vector<Rational> q(pivots_.size());
  std::vector<Rational> residual = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    q[r] = v[pivots_[r]];
    Rational f = residual[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t i = 0; i < n; ++i) residual[i] -= f * basis_[r][i];
  }
  for (const auto& x : residual) {
    if (x != 0) return std::nullopt;
  }
  return q;
}

bool Envelope::contains(const Exponent& g) const {
  auto q = project(g);
  if (!q) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const std::vector<Rational>& h) { return affine(h, *q) >= 0; });
}

std::optional<Rational> Envelope::value(const Exponent& g) const {
  auto q = project(g);
  if (!q) return std::nullopt;
  for (const auto& h : facets_) {
    if (affine(h, *q) < 0) return std::nullopt;
  }
  Rational best = affine(planes_.front(), *q);
  for (const auto& w : planes_) best = std::min(best, affine(w, *q));
  return best;
}

std::vector<Exponent> Envelope::lattice_points() const {
  std::vector<Exponent> out;
  const std::size_t n = origin_.size();
  Exponent cur = lo_;
  while (true) {
    if (contains(cur)) out.push_back(cur);
    std::size_t i = n;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (cur[i] < hi_[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = lo_[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

}  // namespace tropalg
