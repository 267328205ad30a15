#include "support/oracles.hpp"
#include "support/random_poly.hpp"
#include "tropalg/cli/expression.hpp"
#include "tropalg/univariate.hpp"

#include <doctest.h>

#include <map>

using namespace tropalg;
using tropalg::testing::Rng;

namespace {

Polynomial P(const char* text) { return cli::parse_polynomial(text, 1); }
MaxPlus mp(Rational v) { return MaxPlus(std::move(v)); }

// Roots from first principles: every pairwise crossing where the maximum is
// attained twice; multiplicity is the spread of the attaining degrees.
std::map<Rational, unsigned> oracle_roots(const Polynomial& p) {
  std::map<Rational, unsigned> out;
  for (const auto& [e1, c1] : p.terms()) {
    for (const auto& [e2, c2] : p.terms()) {
      if (e2[0] <= e1[0]) continue;
      Rational x = (c1.value() - c2.value()) / (e2[0] - e1[0]);
      Rational best;
      std::uint32_t lo = 0, hi = 0;
      bool first = true;
      for (const auto& [e, c] : p.terms()) {
        Rational v = c.value() + x * e[0];
        if (first || v > best) {
          best = v;
          lo = hi = e[0];
          first = false;
        } else if (v == best) {
          lo = std::min(lo, e[0]);
          hi = std::max(hi, e[0]);
        }
      }
      if (hi > lo) out[x] = hi - lo;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("roots from the Newton polygon") {
  auto r = roots(P("0*x^2 + 3*x + 4"));
  CHECK(r.finite == std::vector<Root>{{3, 1}, {1, 1}});
  CHECK(r.bottom_multiplicity == 0);
  CHECK(roots(P("x^2 + 6")).finite == std::vector<Root>{{3, 2}});
  CHECK(roots(P("x + 7/2")).finite == std::vector<Root>{{Rational(7, 2), 1}});
  auto m = roots(P("2*x^3 + x^2"));
  CHECK(m.finite == std::vector<Root>{{-2, 1}});
  CHECK(m.bottom_multiplicity == 2);
  CHECK_THROWS_AS(roots(Polynomial(1)), DomainError);
  CHECK_THROWS_AS(roots(cli::parse_polynomial("x + y")), UsageError);
}

TEST_CASE("roots agree with the crossing oracle") {
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = testing::random_univariate(rng, static_cast<std::uint32_t>(testing::uniform(rng, 1, 8)));
    auto r = roots(p);
    std::map<Rational, unsigned> got;
    for (const auto& root : r.finite) got[root.value] = root.multiplicity;
    CHECK(got == oracle_roots(p));
    CHECK(r.total() == *p.degree() - *p.valuation() + r.bottom_multiplicity);
    CHECK(r.bottom_multiplicity == *p.valuation());
    for (std::size_t j = 1; j < r.finite.size(); ++j) CHECK(r.finite[j - 1].value > r.finite[j].value);
  }
}

TEST_CASE("factorization") {
  auto f = factor(P("0*x^2 + 3*x + 4"));
  CHECK(f.leading == mp(0));
  CHECK(expand(f) == P("x^2 + 3*x + 4"));
  auto g = factor(P("x^2 + 6"));
  CHECK(g.roots.finite == std::vector<Root>{{3, 2}});
  CHECK(expand(g) == P("x^2 + 3*x + 6"));
  auto h = factor(P("5*x"));
  CHECK(h.leading == mp(5));
  CHECK(h.roots.finite.empty());
  CHECK(h.roots.bottom_multiplicity == 1);

  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = testing::random_univariate(rng, static_cast<std::uint32_t>(testing::uniform(rng, 1, 8)));
    CHECK(expand(factor(p)) == canonicalize(p).max_representative());
  }
}

TEST_CASE("roots of a product are the union") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = testing::random_univariate(rng, static_cast<std::uint32_t>(testing::uniform(rng, 1, 4)));
    Polynomial q = testing::random_univariate(rng, static_cast<std::uint32_t>(testing::uniform(rng, 1, 4)));
    std::map<Rational, unsigned> expected;
    for (const auto* f : {&p, &q}) {
      for (const auto& r : roots(*f).finite) expected[r.value] += r.multiplicity;
    }
    std::map<Rational, unsigned> got;
    auto rpq = roots(canonicalize(p * q).min_representative());
    for (const auto& r : rpq.finite) got[r.value] = r.multiplicity;
    CHECK(got == expected);
    CHECK(rpq.bottom_multiplicity == roots(p).bottom_multiplicity + roots(q).bottom_multiplicity);
  }
}

TEST_CASE("powers of a linear factor") {
  for (unsigned k = 1; k <= 6; ++k) {
    Polynomial linear = P("x + 5/3");
    auto c = canonicalize(linear.pow(k));
    Polynomial two_terms(1, {{{k}, MaxPlus::one()}, {{0}, mp(Rational(5 * k, 3))}});
    CHECK(c == canonicalize(two_terms));
  }
}

TEST_CASE("nth roots") {
  CHECK(adjoin_nth_root(mp(6), 2) == mp(3));
  CHECK(adjoin_nth_root(mp(4), 1) == mp(4));
  CHECK(adjoin_nth_root(mp(-5), 3) == mp(Rational(-5, 3)));
  CHECK_THROWS_AS(adjoin_nth_root(MaxPlus::bottom(), 2), DomainError);
  for (unsigned n = 1; n <= 7; ++n) {
    MaxPlus a = mp(Rational(11, 2));
    MaxPlus r = adjoin_nth_root(a, n);
    CHECK(pow(r, n) == a);
    Polynomial p(1, {{{n}, MaxPlus::one()}, {{0}, a}});
    CHECK(is_zero_of(p, PointK{r}));
  }
}

TEST_CASE("root ideal membership") {
  CHECK(root_ideal_member(P("0*x^2 + 3*x + 4"), mp(1)));
  CHECK_FALSE(root_ideal_member(P("0*x^2 + 3*x + 4"), mp(2)));
  CHECK(root_ideal_member(P("x + -4"), mp(-4)));
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = testing::random_univariate(rng, static_cast<std::uint32_t>(testing::uniform(rng, 1, 6)));
    auto r = roots(p).finite;
    MaxPlus x = (!r.empty() && i % 2) ? mp(r[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(r.size()) - 1))].value)
                                      : mp(testing::random_rational(rng, -20, 20));
    CHECK(root_ideal_member(p, x) == is_zero_of(p, PointK{x}));
  }
}
