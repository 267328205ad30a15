#pragma once

// One-variable polynomials over max-plus Q: roots from the Newton polygon,
// linear factorization and nth roots.

#include "tropalg/canon.hpp"
#include "tropalg/polynomial.hpp"

#include <vector>

namespace tropalg {

struct Root {
  Rational value;
  unsigned multiplicity;

  friend bool operator==(const Root&, const Root&) = default;
};

struct RootMultiset {
  std::vector<Root> finite;          // strictly decreasing roots
  unsigned bottom_multiplicity = 0;  // valuation of the polynomial

  unsigned total() const;
  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;
};

/// Throws DomainError on the zero polynomial, UsageError when arity != 1.
RootMultiset roots(const Polynomial& p);

struct Factorization {
  MaxPlus leading;
  RootMultiset roots;
};

Factorization factor(const Polynomial& p);

/// leading * X^v * prod (X + a_i), multiplied out.
Polynomial expand(const Factorization& f);

/// r with r^n == a. Throws DomainError for the bottom element.
MaxPlus adjoin_nth_root(const MaxPlus& a, unsigned n);

/// Whether X + x divides p in the rational-polynomial quotient.
bool root_ideal_member(const Polynomial& p, const MaxPlus& x);

}  // namespace tropalg
