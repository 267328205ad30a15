#include "tropalg/canon.hpp"

#include "tropalg/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropalg {

AffineForm term_form(const Exponent& e, const Rational& c) {
  AffineForm f{std::vector<Rational>(e.size()), c};
  for (std::size_t i = 0; i < e.size(); ++i) f.coeffs[i] = Rational(e[i]);
  return f;
}

InequalitySystem dominance_system(const std::vector<std::pair<Exponent, Rational>>& terms,
                                  std::size_t index, Relation relation) {
  const auto& [alpha, ca] = terms.at(index);
  InequalitySystem s(alpha.size());
  AffineForm top = term_form(alpha, ca);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j == index) continue;
    s.add(top - term_form(terms[j].first, terms[j].second), relation);
  }
  return s;
}

std::vector<std::pair<Exponent, Rational>> finite_terms(const Polynomial& p) {
  std::vector<std::pair<Exponent, Rational>> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.emplace_back(e, c.value());
  return out;
}

RationalPolynomial::RationalPolynomial(std::size_t arity)
    : arity_(arity), cache_(std::make_shared<Cache>()) {}

Polynomial RationalPolynomial::min_representative() const {
  Polynomial p(arity_);
  for (const auto& t : terms_) p.add_term(t.exponent, MaxPlus(t.coefficient));
  return p;
}

const Envelope& RationalPolynomial::envelope() const {
  if (is_zero()) throw DomainError("the zero class has no envelope");
  std::call_once(cache_->once, [this] {
    std::vector<std::pair<Exponent, Rational>> pts;
    for (const auto& t : terms_) pts.emplace_back(t.exponent, t.coefficient);
    cache_->envelope = std::make_unique<Envelope>(std::move(pts));
  });
  return *cache_->envelope;
}

Polynomial RationalPolynomial::max_representative() const {
  Polynomial p(arity_);
  if (is_zero()) return p;
  const Envelope& env = envelope();
  for (const auto& g : env.lattice_points()) p.add_term(g, MaxPlus(*env.value(g)));
  return p;
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponent != b.terms_[i].exponent ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

std::vector<ExtremalTerm> extremal_monomials(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("zero has no canonical form");
  auto terms = finite_terms(p);
  std::vector<ExtremalTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (auto w = find_witness(dominance_system(terms, i))) {
      out.push_back({terms[i].first, terms[i].second, std::move(*w)});
    }
  }
  return out;
}

MaxPlus envelope_value(const Polynomial& p, const Exponent& g) {
  if (p.is_zero()) throw DomainError("zero has no canonical form");
  if (g.size() != p.arity()) throw UsageError("exponent arity mismatch");
  auto terms = finite_terms(p);
  const std::size_t k = terms.size();
  const std::size_t n = p.arity();
  // Unknowns: mixing weights mu_1..mu_k.
  InequalitySystem s(k);
  for (std::size_t i = 0; i < n; ++i) {
    AffineForm f{std::vector<Rational>(k), Rational(-Rational(g[i]))};
    for (std::size_t j = 0; j < k; ++j) f.coeffs[j] = Rational(terms[j].first[i]);
    s.add(std::move(f), Relation::Equal);
  }
  AffineForm total{std::vector<Rational>(k, Rational(1)), Rational(-1)};
  s.add(std::move(total), Relation::Equal);
  for (std::size_t j = 0; j < k; ++j) {
    AffineForm f{std::vector<Rational>(k), Rational(0)};
    f.coeffs[j] = 1;
    s.add(std::move(f), Relation::GreaterEqual);
  }
  AffineForm objective{std::vector<Rational>(k), Rational(0)};
  for (std::size_t j = 0; j < k; ++j) objective.coeffs[j] = terms[j].second;
  try {
    return MaxPlus(lp_max(objective, s).value);
  } catch (const DomainError&) {
    throw DomainError("outside Newton polytope");
  }
}

RationalPolynomial canonicalize(const Polynomial& p) {
  RationalPolynomial r(p.arity());
  if (!p.is_zero()) r.terms_ = extremal_monomials(p);
  return r;
}

Polynomial max_representative(const RationalPolynomial& r) { return r.max_representative(); }
Polynomial min_representative(const RationalPolynomial& r) { return r.min_representative(); }

namespace {

void check_arity(const RationalPolynomial& r, const RationalPolynomial& s) {
  if (r.arity() != s.arity()) throw UsageError("polynomial arity mismatch");
}

}  // namespace

RationalPolynomial rat_add(const RationalPolynomial& r, const RationalPolynomial& s) {
  check_arity(r, s);
  return canonicalize(r.min_representative() + s.min_representative());
}

RationalPolynomial rat_mul(const RationalPolynomial& r, const RationalPolynomial& s) {
  check_arity(r, s);
  return canonicalize(r.min_representative() * s.min_representative());
}

RationalPolynomial rat_pow(const RationalPolynomial& r, unsigned k) {
  if (k == 0) return canonicalize(Polynomial::constant(r.arity(), MaxPlus::one()));
  // (sum c_a X^a)^k and sum c_a^k X^(k a) agree as functions; the second has
  // the scaled lifted support, whose vertices are the scaled vertices.
  Polynomial p(r.arity());
  for (const auto& t : r.extremal_terms()) {
    p.add_term(t.exponent.scaled(k), MaxPlus(Rational(t.coefficient * k)));
  }
  return canonicalize(p);
}

EqualityResult rat_equal(const RationalPolynomial& r, const RationalPolynomial& s) {
  check_arity(r, s);
  if (r == s) return {true, std::nullopt};
  if (r.is_zero() || s.is_zero()) {
    // Every finite point separates a nonzero function from bottom.
    return {false, RationalPoint(r.arity(), Rational(0))};
  }
  // A term of the joint envelope missing from one side dominates alone at
  // its witness, so that side is strictly smaller there.
  RationalPolynomial joint = rat_add(r, s);
  for (const auto* side : {&r, &s}) {
    for (const auto& t : joint.extremal_terms()) {
      bool present = std::any_of(side->extremal_terms().begin(), side->extremal_terms().end(),
                                 [&](const ExtremalTerm& u) {
                                   return u.exponent == t.exponent && u.coefficient == t.coefficient;
                                 });
      if (!present) return {false, t.witness};
    }
  }
  throw std::logic_error("rat_equal: distinct classes without a separating term");
}

std::optional<RationalPolynomial> divide(const RationalPolynomial& dividend,
                                         const RationalPolynomial& divisor) {
  check_arity(dividend, divisor);
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (dividend.is_zero()) return RationalPolynomial::zero(dividend.arity());

  const auto& p = dividend.extremal_terms();
  const auto& q = divisor.extremal_terms();
  const Envelope& env = dividend.envelope();

  // Any exact quotient is attained through extremal terms, so its support
  // can be taken among the differences e - a.
  std::set<Exponent> candidates;
  for (const auto& e : p) {
    for (const auto& a : q) {
      if (auto b = e.exponent.minus(a.exponent)) candidates.insert(*b);
    }
  }

  // Greatest coefficients with divisor * R below the dividend's envelope.
  std::map<Exponent, Rational> quotient;
  for (const auto& b : candidates) {
    std::optional<Rational> best;
    for (const auto& a : q) {
      auto v = env.value(a.exponent + b);
      if (!v) {
        best.reset();
        break;
      }
      Rational bound = *v - a.coefficient;
      if (!best || bound < *best) best = bound;
    }
    if (best) quotient.emplace(b, *best);
  }

  // The product stays below the dividend; it is equal iff it reaches every
  // extremal coefficient.
  for (const auto& e : p) {
    bool reached = false;
    for (const auto& a : q) {
      auto b = e.exponent.minus(a.exponent);
      if (!b) continue;
      auto it = quotient.find(*b);
      if (it != quotient.end() && a.coefficient + it->second == e.coefficient) {
        reached = true;
        break;
      }
    }
    if (!reached) return std::nullopt;
  }

  Polynomial r(dividend.arity());
  for (const auto& [b, c] : quotient) r.add_term(b, MaxPlus(c));
  return canonicalize(r);
}

std::optional<PowerDivisor> divides_power(const RationalPolynomial& p, const RationalPolynomial& q,
                                          unsigned k_max) {
  check_arity(p, q);
  for (unsigned k = 1; k <= k_max; ++k) {
    if (auto r = divide(rat_pow(q, k), p)) return PowerDivisor{k, std::move(*r)};
  }
  return std::nullopt;
}

bool power_cancel(const RationalPolynomial& p, const RationalPolynomial& q, unsigned m) {
  if (m == 0) throw UsageError("power_cancel requires m >= 1");
  return rat_equal(rat_pow(p, m), rat_pow(q, m)).equal;
}

std::string to_string(const RationalPolynomial& r) { return to_string(r.min_representative()); }

}  // namespace tropalg
