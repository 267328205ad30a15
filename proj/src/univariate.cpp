#include "tropalg/univariate.hpp"

#include "tropalg/errors.hpp"

namespace tropalg {

namespace {

void require_univariate(const Polynomial& p) {
  if (p.arity() != 1) throw UsageError("expected a polynomial in one variable");
  if (p.is_zero()) throw DomainError("the zero polynomial has no roots");
}

struct Lifted {
  Rational degree;
  Rational value;
};

// (b - a) x (c - a) >= 0 means a, b, c do not turn clockwise.
bool not_clockwise(const Lifted& a, const Lifted& b, const Lifted& c) {
  Rational cross = (b.degree - a.degree) * (c.value - a.value) -
                   (b.value - a.value) * (c.degree - a.degree);
  return cross >= 0;
}

// Vertices of the upper hull of the lifted support, by increasing degree.
std::vector<std::pair<std::uint32_t, Rational>> upper_hull(const Polynomial& p) {
  std::vector<std::pair<std::uint32_t, Rational>> hull;
  for (const auto& [e, c] : p.terms()) {
    Lifted next{Rational(e[0]), c.value()};
    while (hull.size() >= 2) {
      const auto& [d1, c1] = hull[hull.size() - 2];
      const auto& [d2, c2] = hull.back();
      if (!not_clockwise({Rational(d1), c1}, {Rational(d2), c2}, next)) break;
      hull.pop_back();
    }
    hull.emplace_back(e[0], c.value());
  }
  return hull;
}

}  // namespace

unsigned RootMultiset::total() const {
  unsigned n = bottom_multiplicity;
  for (const auto& r : finite) n += r.multiplicity;
  return n;
}

RootMultiset roots(const Polynomial& p) {
  require_univariate(p);
  auto hull = upper_hull(p);
  RootMultiset out;
  out.bottom_multiplicity = hull.front().first;
  // Edges from high to low degree give decreasing roots.
  for (std::size_t i = hull.size() - 1; i > 0; --i) {
    const auto& [lo, clo] = hull[i - 1];
    const auto& [hi, chi] = hull[i];
    unsigned width = hi - lo;
    out.finite.push_back({Rational((clo - chi) / width), width});
  }
  return out;
}

Factorization factor(const Polynomial& p) {
  require_univariate(p);
  return {p.terms().rbegin()->second, roots(p)};
}

Polynomial expand(const Factorization& f) {
  Polynomial result = Polynomial::monomial(f.leading, Exponent{f.roots.bottom_multiplicity});
  for (const auto& r : f.roots.finite) {
    Polynomial linear(1, {{Exponent{1}, MaxPlus::one()}, {Exponent{0}, MaxPlus(r.value)}});
    result = result * linear.pow(r.multiplicity);
  }
  return result;
}

MaxPlus adjoin_nth_root(const MaxPlus& a, unsigned n) {
  if (n == 0) throw UsageError("root order must be at least 1");
  if (a.is_bottom()) throw DomainError("no root of the zero element");
  return MaxPlus(Rational(a.value() / n));
}

bool root_ideal_member(const Polynomial& p, const MaxPlus& x) {
  if (p.arity() != 1) throw UsageError("expected a polynomial in one variable");
  if (x.is_bottom()) throw DomainError("root must be finite");
  Polynomial linear(1, {{Exponent{1}, MaxPlus::one()}, {Exponent{0}, x}});
  return divide(canonicalize(p), canonicalize(linear)).has_value();
}

}  // namespace tropalg
