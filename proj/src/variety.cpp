#include "tropalg/variety.hpp"

#include "tropalg/errors.hpp"

#include <algorithm>
#include <queue>

namespace tropalg {

namespace {

std::vector<std::pair<Exponent, Rational>> extremal_pairs(const RationalPolynomial& p) {
  std::vector<std::pair<Exponent, Rational>> out;
  for (const auto& t : p.extremal_terms()) out.emplace_back(t.exponent, t.coefficient);
  return out;
}

// Index of the unique term of p that is largest at y; DomainError on ties.
std::size_t dominant_term(const RationalPolynomial& p, std::span<const Rational> y) {
  const auto& terms = p.extremal_terms();
  std::size_t best = 0;
  bool tie = false;
  Rational best_value = term_form(terms[0].exponent, terms[0].coefficient)(y);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    Rational v = term_form(terms[i].exponent, terms[i].coefficient)(y);
    if (v > best_value) {
      best = i;
      best_value = v;
      tie = false;
    } else if (v == best_value) {
      tie = true;
    }
  }
  if (tie) throw DomainError("varieties do not share this wall");
  return best;
}

std::size_t find_exponent(const RationalPolynomial& p, const Exponent& e) {
  const auto& terms = p.extremal_terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent == e) return i;
  }
  throw UsageError("exponent " + to_string(e) + " is not an extremal term");
}

AffineForm wall_form(const RationalPolynomial& p, std::size_t i, std::size_t j) {
  const auto& t = p.extremal_terms();
  return term_form(t[i].exponent, t[i].coefficient) - term_form(t[j].exponent, t[j].coefficient);
}

}  // namespace

std::vector<DominanceRegion> dominance_regions(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no dominance regions");
  std::vector<DominanceRegion> out;
  for (const auto& t : p.extremal_terms()) out.push_back({t.exponent, t.coefficient, t.witness});
  return out;
}

VarietyComplex variety_cells(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial vanishes everywhere");
  VarietyComplex complex{p.arity(), {}};
  auto terms = extremal_pairs(p);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      AffineForm fi = term_form(terms[i].first, terms[i].second);
      InequalitySystem s(p.arity());
      s.add(fi - term_form(terms[j].first, terms[j].second), Relation::Equal);
      for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k != i && k != j) s.add(fi - term_form(terms[k].first, terms[k].second), Relation::GreaterEqual);
      }
      auto w = find_witness(s);
      if (!w) continue;
      int dim = affine_dimension(s);
      complex.cells.push_back({i, j, terms[i].first, terms[j].first, std::move(s), dim, std::move(*w)});
    }
  }
  return complex;
}

DominanceGraph dominance_graph(const RationalPolynomial& p) {
  DominanceGraph g{dominance_regions(p), {}, true};
  const int wall_dim = static_cast<int>(p.arity()) - 1;
  for (const auto& cell : variety_cells(p).cells) {
    if (cell.dimension == wall_dim) g.edges.push_back({cell.first, cell.second, wall_form(p, cell.first, cell.second)});
  }
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop();
    for (auto u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        todo.push(u);
      }
    }
  }
  g.connected = reached == g.vertices.size();
  return g;
}

bool variety_contains_point(const RationalPolynomial& p, std::span<const Rational> x) {
  if (x.size() != p.arity()) throw UsageError("point arity does not match polynomial arity");
  PointK point;
  for (const auto& v : x) point.emplace_back(v);
  return is_zero_of(p.min_representative(), point);
}

Polynomial restrict_to_stratum(const Polynomial& p, const std::vector<bool>& bottom) {
  Polynomial r(p.arity());
  for (const auto& [e, c] : p.terms()) {
    bool survives = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (bottom[i] && e[i] > 0) survives = false;
    }
    if (survives) r.add_term(e, c);
  }
  return r;
}

bool variety_included(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.arity() != q.arity()) throw UsageError("polynomial arity mismatch");
  if (p.is_zero() || q.is_zero()) throw DomainError("variety inclusion needs nonzero polynomials");
  const std::size_t n = p.arity();
  const Polynomial pm = p.min_representative();
  const Polynomial qm = q.min_representative();
  // Sending a set S of coordinates to bottom kills the terms that use them;
  // the remaining coordinates range over Q.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> bottom(n);
    for (std::size_t i = 0; i < n; ++i) bottom[i] = (mask >> i) & 1u;
    RationalPolynomial ps = canonicalize(restrict_to_stratum(pm, bottom));
    RationalPolynomial qs = canonicalize(restrict_to_stratum(qm, bottom));
    if (ps.is_zero()) {
      if (!qs.is_zero()) return false;
      continue;
    }
    if (qs.is_zero()) continue;
    auto qterms = extremal_pairs(qs);
    for (const auto& cell : variety_cells(ps).cells) {
      for (std::size_t g = 0; g < qterms.size(); ++g) {
        InequalitySystem s = cell.system;
        s.append(dominance_system(qterms, g));
        if (is_strictly_feasible(s)) return false;
      }
    }
  }
  return true;
}

Rational edge_exponent(const RationalPolynomial& p, const RationalPolynomial& q, const Exponent& a,
                       const Exponent& b) {
  if (p.arity() != q.arity()) throw UsageError("polynomial arity mismatch");
  if (p.is_zero() || q.is_zero()) throw DomainError("varieties do not share this wall");
  std::size_t i = find_exponent(p, a);
  std::size_t j = find_exponent(p, b);
  auto graph = dominance_graph(p);
  bool is_edge = std::any_of(graph.edges.begin(), graph.edges.end(), [&](const GraphEdge& e) {
    return (e.from == i && e.to == j) || (e.from == j && e.to == i);
  });
  if (!is_edge) throw DomainError("varieties do not share this wall");
  std::size_t qi = dominant_term(q, p.extremal_terms()[i].witness);
  std::size_t qj = dominant_term(q, p.extremal_terms()[j].witness);
  if (qi == qj) throw DomainError("varieties do not share this wall");
  AffineForm l = wall_form(p, i, j);
  AffineForm m = wall_form(q, qi, qj);
  // l = k m coefficientwise, constant included
  std::optional<Rational> k;
  auto match = [&](const Rational& lv, const Rational& mv) {
    if (mv == 0) return lv == 0;
    Rational ratio = lv / mv;
    if (!k) k = ratio;
    return *k == ratio;
  };
  for (std::size_t t = 0; t < l.coeffs.size(); ++t) {
    if (!match(l.coeffs[t], m.coeffs[t])) throw DomainError("varieties do not share this wall");
  }
  if (!match(l.constant, m.constant) || !k || *k <= 0) {
    throw DomainError("varieties do not share this wall");
  }
  return *k;
}

}  // namespace tropalg
