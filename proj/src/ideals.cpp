#include "tropalg/ideals.hpp"

#include "tropalg/variety.hpp"

#include <set>

namespace tropalg {

namespace {

void require_univariate_generator(const Polynomial& p) {
  if (p.arity() != 1) throw UsageError("expected a polynomial in one variable");
  if (p.is_zero()) throw DomainError("an ideal generator must be nonzero");
}

}  // namespace

std::optional<Polynomial> membership_exact(const Polynomial& a, const Polynomial& p) {
  if (a.arity() != p.arity()) throw UsageError("polynomial arity mismatch");
  if (p.is_zero()) throw DomainError("an ideal generator must be nonzero");
  std::set<Exponent> candidates;
  for (const auto& [e, c] : a.terms()) {
    for (const auto& [f, d] : p.terms()) {
      if (auto b = e.minus(f)) candidates.insert(*b);
    }
  }
  // Greatest q with p q <= a, then check that it reaches a.
  Polynomial q(a.arity());
  for (const auto& b : candidates) {
    std::optional<MaxPlus> best;
    for (const auto& [f, d] : p.terms()) {
      MaxPlus target = a.coefficient(f + b);
      if (target.is_bottom()) {
        best.reset();
        break;
      }
      MaxPlus bound = target * d.inv();
      if (!best || bound < *best) best = bound;
    }
    if (best) q.add_term(b, *best);
  }
  if (p * q != a) return std::nullopt;
  return q;
}

bool closure_member(const Polynomial& a, const Polynomial& p) {
  require_univariate_generator(p);
  if (a.arity() != 1) throw UsageError("expected a polynomial in one variable");
  const auto v = *p.valuation();
  for (const auto& [e, c] : a.terms()) {
    if (e[0] < v) return false;
  }
  return true;
}

std::optional<Polynomial> closure_witness(const Polynomial& a, const Polynomial& p) {
  if (!closure_member(a, p)) return std::nullopt;
  const auto v = static_cast<std::uint32_t>(*p.valuation());
  const MaxPlus scale = p.coefficient(Exponent{v}).inv();
  Polynomial q(1);
  for (const auto& [e, c] : a.terms()) q.add_term(Exponent{e[0] - v}, scale * c);
  return q;
}

bool is_dense(const Polynomial& p) {
  require_univariate_generator(p);
  return !p.coefficient(Exponent{0}).is_bottom();
}

bool is_closed(const Polynomial& p) {
  require_univariate_generator(p);
  return p.size() == 1;
}

namespace {

// Some point of the cell where a term of `high` weakly tops `high` and
// strictly beats every term of `low`.
bool exceeds_somewhere(const InequalitySystem& cell, const Polynomial& high, const Polynomial& low) {
  auto terms = finite_terms(high);
  auto others = finite_terms(low);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    InequalitySystem s = cell;
    s.append(dominance_system(terms, i, Relation::GreaterEqual));
    AffineForm top = term_form(terms[i].first, terms[i].second);
    for (const auto& [e, c] : others) s.add(top - term_form(e, c), Relation::Greater);
    if (is_strictly_feasible(s)) return true;
  }
  return false;
}

}  // namespace

bool congruent_mod(const RationalPolynomial& a, const RationalPolynomial& b,
                   const RationalPolynomial& p) {
  if (a.arity() != p.arity() || b.arity() != p.arity()) throw UsageError("polynomial arity mismatch");
  if (p.is_zero()) throw DomainError("an ideal generator must be nonzero");
  const std::size_t n = p.arity();
  const Polynomial am = a.min_representative();
  const Polynomial bm = b.min_representative();
  const Polynomial pm = p.min_representative();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> bottom(n);
    for (std::size_t i = 0; i < n; ++i) bottom[i] = (mask >> i) & 1u;
    RationalPolynomial ps = canonicalize(restrict_to_stratum(pm, bottom));
    if (ps.extremal_terms().size() < 2) continue;
    Polynomial as = restrict_to_stratum(am, bottom);
    Polynomial bs = restrict_to_stratum(bm, bottom);
    for (const auto& cell : variety_cells(ps).cells) {
      if (exceeds_somewhere(cell.system, as, bs) || exceeds_somewhere(cell.system, bs, as)) {
        return false;
      }
    }
  }
  return true;
}

bool radical_member(const RationalPolynomial& q, const RationalPolynomial& p) {
  return variety_included(p, q);
}

}  // namespace tropalg
