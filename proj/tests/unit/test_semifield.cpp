#include "support/oracles.hpp"
#include "support/random_poly.hpp"
#include "tropalg/polynomial.hpp"

#include <doctest.h>

using namespace tropalg;
using tropalg::testing::Rng;

namespace {

MaxPlus mp(long v) { return MaxPlus(Rational(v)); }

template <IdempotentSemifield K>
void check_laws(const K& a, const K& b, const K& c) {
  CHECK(a + a == a);
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a + K::zero() == a);
  CHECK(a * K::one() == a);
  CHECK(a * K::zero() == K::zero());
  // a <= b iff a + b == b
  CHECK((a <= b) == (a + b == b));
  if (!a.is_zero()) CHECK(a * a.inv() == K::one());
}

}  // namespace

TEST_CASE("max-plus arithmetic") {
  CHECK(mp(3) + mp(5) == mp(5));
  CHECK(mp(3) * mp(5) == mp(8));
  CHECK(mp(3) + MaxPlus::bottom() == mp(3));
  CHECK((mp(3) * MaxPlus::bottom()).is_bottom());
  CHECK(mp(3).inv() == mp(-3));
  CHECK_THROWS_AS(MaxPlus::bottom().inv(), DomainError);
  CHECK(pow(MaxPlus(Rational(1, 2)), 4) == mp(2));
  CHECK(MaxPlus::bottom() < mp(-1000));
  CHECK(to_string(MaxPlus(Rational(-3, 4))) == "-3/4");
  CHECK(to_string(MaxPlus::bottom()) == "-inf");
}

TEST_CASE("semifield laws hold on random max-plus elements and on F1") {
  Rng rng(11);
  auto draw = [&] {
    return testing::uniform(rng, 0, 9) == 0 ? MaxPlus::bottom() : MaxPlus(testing::random_rational(rng, -10, 10));
  };
  for (int i = 0; i < 300; ++i) check_laws(draw(), draw(), draw());
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      for (bool c : {false, true}) check_laws(BoolF1(a), BoolF1(b), BoolF1(c));
    }
  }
}

TEST_CASE("characteristic one") {
  for (unsigned k = 1; k <= 5; ++k) {
    CHECK(char_set_member<MaxPlus>(k));
    CHECK(char_set_member<BoolF1>(k));
  }
  CHECK_THROWS_AS(char_set_member<MaxPlus>(0), UsageError);
  CHECK(quasi_symmetric(mp(4)) == mp(4));
  CHECK(quasi_symmetric(MaxPlus::one()) == MaxPlus::one());
}

TEST_CASE("freshman's dream in K") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    MaxPlus x(testing::random_rational(rng, -9, 9)), y(testing::random_rational(rng, -9, 9));
    unsigned n = static_cast<unsigned>(testing::uniform(rng, 1, 7));
    CHECK(pow(x + y, n) == pow(x, n) + pow(y, n));
  }
}

TEST_CASE("polynomial evaluation and printing") {
  Polynomial p(1, {{{2}, mp(0)}, {{1}, mp(3)}, {{0}, mp(4)}});
  CHECK(p(PointK{mp(0)}) == mp(4));
  CHECK(p(PointK{mp(5)}) == mp(10));
  CHECK(p(PointK{MaxPlus::bottom()}) == mp(4));
  CHECK(to_string(p) == "x^2 + 3*x + 4");
  CHECK(p.degree() == 2u);
  CHECK(p.valuation() == 0u);
  CHECK(to_string(Polynomial(2)) == "-inf");
  CHECK(to_string(Polynomial::variable(4, 2)) == "X3");

  // adding the bottom coefficient is a no-op
  Polynomial q = p;
  q.add_term({5}, MaxPlus::bottom());
  CHECK(q == p);
}

TEST_CASE("zeros: two-fold attainment matches the decomposition definition") {
  Polynomial p(1, {{{2}, mp(0)}, {{1}, mp(3)}, {{0}, mp(4)}});
  CHECK(is_zero_of(p, PointK{mp(1)}));
  CHECK(is_zero_of(p, PointK{mp(3)}));
  CHECK_FALSE(is_zero_of(p, PointK{mp(2)}));
  CHECK(is_zero_of(Polynomial::variable(1, 0), PointK{MaxPlus::bottom()}));

  Rng rng(21);
  for (int i = 0; i < 400; ++i) {
    testing::PolySpec spec{.arity = 2, .max_terms = 6, .max_degree = 3, .lo = -4, .hi = 4, .max_den = 1};
    Polynomial q = testing::random_polynomial(rng, spec);
    PointK x;
    for (int j = 0; j < 2; ++j) {
      x.push_back(testing::uniform(rng, 0, 7) == 0 ? MaxPlus::bottom() : MaxPlus(Rational(testing::uniform(rng, -4, 4))));
    }
    CHECK(is_zero_of(q, x) == oracle::zero_by_decomposition(q, x));
  }
}

TEST_CASE("derivative is a derivation in characteristic one") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    testing::PolySpec spec{.arity = 2, .max_terms = 5, .max_degree = 4};
    Polynomial p = testing::random_polynomial(rng, spec);
    Polynomial q = testing::random_polynomial(rng, spec);
    for (std::size_t v = 0; v < 2; ++v) CHECK(derivative(p * q, v) == derivative(p, v) * q + p * derivative(q, v));
  }
  Polynomial p(1, {{{3}, mp(1)}, {{1}, mp(2)}, {{0}, mp(7)}});
  CHECK(derivative(p, 0) == Polynomial(1, {{{2}, mp(1)}, {{0}, mp(2)}}));
}

TEST_CASE("orthogonality means disjoint supports") {
  Polynomial a(1, {{{2}, mp(0)}});
  Polynomial b(1, {{{1}, mp(0)}, {{0}, mp(1)}});
  CHECK(orthogonal(a, b));
  CHECK_FALSE(orthogonal(a + b, b));
}

TEST_CASE("polynomial powers agree with repeated products") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = testing::random_polynomial(rng, {.arity = 2, .max_terms = 3, .max_degree = 2});
    Polynomial acc = Polynomial::constant(2, MaxPlus::one());
    for (unsigned k = 0; k <= 4; ++k) {
      CHECK(p.pow(k) == acc);
      acc = acc * p;
    }
  }
}
