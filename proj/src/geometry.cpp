#include "tropalg/geometry.hpp"

#include "tropalg/errors.hpp"
#include "tropalg/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace tropalg {

Rational AffineForm::operator()(std::span<const Rational> y) const {
  if (y.size() != coeffs.size()) throw UsageError("point dimension does not match form");
  Rational v = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * y[i];
  return v;
}

AffineForm AffineForm::operator-(const AffineForm& other) const {
  if (dim() != other.dim()) throw UsageError("affine form dimension mismatch");
  AffineForm d = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) d.coeffs[i] -= other.coeffs[i];
  d.constant -= other.constant;
  return d;
}

bool Constraint::satisfied_by(std::span<const Rational> y) const {
  Rational v = form(y);
  switch (relation) {
    case Relation::Greater: return v > 0;
    case Relation::GreaterEqual: return v >= 0;
    case Relation::Equal: return v == 0;
  }
  return false;
}

InequalitySystem& InequalitySystem::add(AffineForm form, Relation relation) {
  if (form.dim() != dim_) throw UsageError("constraint dimension does not match system dimension");
  constraints_.push_back({std::move(form), relation});
  return *this;
}

InequalitySystem& InequalitySystem::append(const InequalitySystem& other) {
  if (other.dim_ != dim_) throw UsageError("system dimension mismatch");
  constraints_.insert(constraints_.end(), other.constraints_.begin(), other.constraints_.end());
  return *this;
}

InequalitySystem InequalitySystem::closure() const {
  InequalitySystem c = *this;
  for (auto& k : c.constraints_) {
    if (k.relation == Relation::Greater) k.relation = Relation::GreaterEqual;
  }
  return c;
}

bool InequalitySystem::satisfied_by(std::span<const Rational> y) const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const Constraint& c) { return c.satisfied_by(y); });
}

bool InequalitySystem::has_strict() const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [](const Constraint& c) { return c.relation == Relation::Greater; });
}

namespace {

// a.x + c > 0 (strict) or a.x + c >= 0
struct Row {
  std::vector<Rational> a;
  Rational c;
  bool strict = false;
};

enum class RowKind { Trivial, Violated, Proper };

RowKind normalize(Row& r) {
  auto lead = std::find_if(r.a.begin(), r.a.end(), [](const Rational& v) { return v != 0; });
  if (lead == r.a.end()) {
    bool ok = r.strict ? r.c > 0 : r.c >= 0;
    return ok ? RowKind::Trivial : RowKind::Violated;
  }
  Rational scale = abs(*lead);
  if (scale != 1) {
    for (auto& v : r.a) v /= scale;
    r.c /= scale;
  }
  return RowKind::Proper;
}

// Rows keyed by their normalized direction; only the tightest bound survives.
class RowSet {
 public:
  bool insert(Row r) {
    switch (normalize(r)) {
      case RowKind::Trivial: return true;
      case RowKind::Violated: return false;
      case RowKind::Proper: break;
    }
    auto [it, inserted] = rows_.try_emplace(std::move(r.a), r.c, r.strict);
    if (!inserted) {
      auto& [c, strict] = it->second;
      if (r.c < c) {
        c = r.c;
        strict = r.strict;
      } else if (r.c == c) {
        strict = strict || r.strict;
      }
    }
    return true;
  }

  std::vector<Row> rows() const {
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (const auto& [a, cs] : rows_) out.push_back({a, cs.first, cs.second});
    return out;
  }

 private:
  std::map<std::vector<Rational>, std::pair<Rational, bool>> rows_;
};

// x_var = a.x + c
struct Substitution {
  std::size_t var;
  std::vector<Rational> a;
  Rational c;
};

struct Stage {
  std::size_t var;
  std::vector<Row> rows;
};

struct Bound {
  Rational value;
  bool strict = false;
};

Rational pick_value(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
  if (lo && hi) {
    if (lo->value == hi->value) return lo->value;
    return (lo->value + hi->value) / 2;
  }
  if (lo) return lo->strict ? Rational(lo->value + 1) : lo->value;
  if (hi) return hi->strict ? Rational(hi->value - 1) : hi->value;
  return Rational(0);
}

std::optional<RationalPoint> fourier_motzkin(const InequalitySystem& system) {
  const std::size_t n = system.dim();
  std::vector<Row> inequalities;
  std::vector<Row> equalities;
  for (const auto& k : system.constraints()) {
    Row r{k.form.coeffs, k.form.constant, k.relation == Relation::Greater};
    (k.relation == Relation::Equal ? equalities : inequalities).push_back(std::move(r));
  }

  // Equalities are eliminated by substitution.
  std::vector<Substitution> subs;
  for (std::size_t i = 0; i < equalities.size(); ++i) {
    const Row& e = equalities[i];
    auto lead = std::find_if(e.a.begin(), e.a.end(), [](const Rational& v) { return v != 0; });
    if (lead == e.a.end()) {
      if (e.c != 0) return std::nullopt;
      continue;
    }
    std::size_t k = static_cast<std::size_t>(lead - e.a.begin());
    Substitution sub{k, std::vector<Rational>(n, Rational(0)), Rational(-e.c / e.a[k])};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) sub.a[j] = -e.a[j] / e.a[k];
    }
    auto apply = [&](Row& r) {
      if (r.a[k] == 0) return;
      Rational f = r.a[k];
      r.a[k] = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (sub.a[j] != 0) r.a[j] += f * sub.a[j];
      }
      r.c += f * sub.c;
    };
    for (std::size_t j = i + 1; j < equalities.size(); ++j) apply(equalities[j]);
    for (auto& r : inequalities) apply(r);
    subs.push_back(std::move(sub));
  }

  RowSet initial;
  for (auto& r : inequalities) {
    if (!initial.insert(std::move(r))) return std::nullopt;
  }
  std::vector<Row> rows = initial.rows();
  std::vector<Stage> stages;

  while (!rows.empty()) {
    std::size_t var = n;
    std::size_t best_cost = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[j] > 0) ++pos;
        else if (r.a[j] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      std::size_t cost = pos * neg;
      if (var == n || cost < best_cost) {
        var = j;
        best_cost = cost;
      }
    }
    if (var == n) break;

    Stage stage{var, {}};
    std::vector<const Row*> lower, upper;
    RowSet next;
    for (const auto& r : rows) {
      if (r.a[var] == 0) {
        next.insert(r);
      } else {
        stage.rows.push_back(r);
      }
    }
    for (const auto& r : stage.rows) (r.a[var] > 0 ? lower : upper).push_back(&r);
    for (const Row* lo : lower) {
      for (const Row* hi : upper) {
        Rational sl = lo->a[var];
        Rational sh = -hi->a[var];
        Row combined{std::vector<Rational>(n), lo->c / sl + hi->c / sh, lo->strict || hi->strict};
        for (std::size_t j = 0; j < n; ++j) combined.a[j] = lo->a[j] / sl + hi->a[j] / sh;
        combined.a[var] = 0;
        if (!next.insert(std::move(combined))) return std::nullopt;
      }
    }
    stages.push_back(std::move(stage));
    rows = next.rows();
  }

  RationalPoint x(n, Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t var = it->var;
    std::optional<Bound> lo, hi;
    for (const auto& r : it->rows) {
      Rational rest = r.c;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != var && r.a[j] != 0) rest += r.a[j] * x[j];
      }
      Rational bound = -rest / r.a[var];
      if (r.a[var] > 0) {
        if (!lo || bound > lo->value) lo = Bound{bound, r.strict};
        else if (bound == lo->value) lo->strict = lo->strict || r.strict;
      } else {
        if (!hi || bound < hi->value) hi = Bound{bound, r.strict};
        else if (bound == hi->value) hi->strict = hi->strict || r.strict;
      }
    }
    x[var] = pick_value(lo, hi);
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational v = it->c;
    for (std::size_t j = 0; j < n; ++j) {
      if (it->a[j] != 0) v += it->a[j] * x[j];
    }
    x[it->var] = v;
  }
  return x;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order; stops early
// when f returns false.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<RationalPoint> find_witness(const InequalitySystem& system) {
  auto x = fourier_motzkin(system);
  if (x && !system.satisfied_by(*x)) {
    throw std::logic_error("Fourier-Motzkin witness failed verification");
  }
  return x;
}

bool is_strictly_feasible(const InequalitySystem& system) { return find_witness(system).has_value(); }

int affine_dimension(const InequalitySystem& system) {
  InequalitySystem closed = system.closure();
  if (!is_strictly_feasible(closed)) return -1;
  linalg::Matrix equalities;
  const auto& cs = closed.constraints();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].relation == Relation::Equal) {
      equalities.push_back(cs[i].form.coeffs);
      continue;
    }
    InequalitySystem tightened(closed.dim());
    for (std::size_t j = 0; j < cs.size(); ++j) {
      tightened.add(cs[j].form, j == i ? Relation::Greater : cs[j].relation);
    }
    if (!is_strictly_feasible(tightened)) equalities.push_back(cs[i].form.coeffs);
  }
  const std::size_t r = equalities.empty() ? 0 : linalg::rank(equalities);
  return static_cast<int>(closed.dim() - r);
}

LpSolution lp_max(const AffineForm& objective, const InequalitySystem& system) {
  const std::size_t n = system.dim();
  if (objective.dim() != n) throw UsageError("objective dimension does not match system");
  if (system.has_strict()) throw UsageError("lp_max accepts only >= and = constraints");
  if (!is_strictly_feasible(system)) throw DomainError("infeasible");

  // Unbounded iff some recession direction strictly improves the objective.
  InequalitySystem recession(n);
  for (const auto& c : system.constraints()) recession.add({c.form.coeffs, Rational(0)}, c.relation);
  recession.add({objective.coeffs, Rational(0)}, Relation::Greater);
  if (is_strictly_feasible(recession)) return LpSolution{true, Rational(0), {}};

  // The objective is constant along the lineality space, so pinning it to
  // zero keeps the optimum and leaves a pointed polyhedron.
  linalg::Matrix all_rows;
  for (const auto& c : system.constraints()) all_rows.push_back(c.form.coeffs);
  std::vector<Constraint> equalities;
  std::vector<Constraint> inequalities;
  for (const auto& c : system.constraints()) {
    (c.relation == Relation::Equal ? equalities : inequalities).push_back(c);
  }
  for (auto& l : linalg::nullspace(all_rows, n)) {
    equalities.push_back({AffineForm{std::move(l), Rational(0)}, Relation::Equal});
  }

  linalg::Matrix basis_rows;
  linalg::Vector basis_rhs;
  for (const auto& e : equalities) {
    linalg::Matrix trial = basis_rows;
    trial.push_back(e.form.coeffs);
    if (linalg::rank(trial) > basis_rows.size()) {
      basis_rows.push_back(e.form.coeffs);
      basis_rhs.push_back(-e.form.constant);
    }
  }
  const std::size_t need = n - basis_rows.size();

  std::optional<LpSolution> best;
  for_each_combination(inequalities.size(), need, [&](const std::vector<std::size_t>& pick) {
    linalg::Matrix a = basis_rows;
    linalg::Vector b = basis_rhs;
    for (auto i : pick) {
      a.push_back(inequalities[i].form.coeffs);
      b.push_back(-inequalities[i].form.constant);
    }
    auto x = linalg::solve(std::move(a), std::move(b));
    if (!x || !system.satisfied_by(*x)) return true;
    Rational v = objective(*x);
    if (!best || v > best->value) best = LpSolution{false, v, std::move(*x)};
    return true;
  });
  if (!best) throw std::logic_error("lp_max: no basic feasible solution on a pointed polyhedron");
  return *best;
}

bool in_convex_hull(std::span<const Exponent> points, const Exponent& target) {
  if (points.empty()) return false;
  const std::size_t n = target.size();
  // Unknowns (w, b): w.p <= b for every point and w.target > b.
  InequalitySystem separation(n + 1);
  for (const auto& p : points) {
    if (p.size() != n) throw UsageError("exponent arity mismatch");
    AffineForm f{std::vector<Rational>(n + 1), Rational(0)};
    for (std::size_t i = 0; i < n; ++i) f.coeffs[i] = -Rational(p[i]);
    f.coeffs[n] = 1;
    separation.add(std::move(f), Relation::GreaterEqual);
  }
  AffineForm g{std::vector<Rational>(n + 1), Rational(0)};
  for (std::size_t i = 0; i < n; ++i) g.coeffs[i] = Rational(target[i]);
  g.coeffs[n] = -1;
  separation.add(std::move(g), Relation::Greater);
  return !is_strictly_feasible(separation);
}

std::vector<Exponent> lattice_points(std::span<const Exponent> points) {
  if (points.empty()) throw UsageError("lattice_points needs at least one point");
  const std::size_t n = points.front().size();
  Exponent lo = points.front(), hi = points.front();
  for (const auto& p : points) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  std::vector<Exponent> out;
  Exponent cur = lo;
  while (true) {
    if (in_convex_hull(points, cur)) out.push_back(cur);
    std::size_t i = n;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = lo[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

std::vector<Exponent> minkowski_sum(std::span<const Exponent> a, std::span<const Exponent> b) {
  std::set<Exponent> sums;
  for (const auto& x : a) {
    for (const auto& y : b) sums.insert(x + y);
  }
  return {sums.begin(), sums.end()};
}

}  // namespace tropalg
