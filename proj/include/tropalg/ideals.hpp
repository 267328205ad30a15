#pragma once

// Principal ideals: exact membership in K[X], closure and density in one
// variable, and congruence / radical membership over rational polynomials.

#include "tropalg/canon.hpp"
#include "tropalg/errors.hpp"
#include "tropalg/polynomial.hpp"

#include <optional>

namespace tropalg {

template <class Generator>
class PrincipalIdeal {
 public:
  explicit PrincipalIdeal(Generator g) : generator_(std::move(g)) {
    if (generator_.is_zero()) throw DomainError("an ideal generator must be nonzero");
  }
  const Generator& generator() const { return generator_; }

 private:
  Generator generator_;
};

/// Q with p * Q == a coefficientwise, if any.
std::optional<Polynomial> membership_exact(const Polynomial& a, const Polynomial& p);

/// Whether a lies in the closure of the ideal p K[X] (one variable).
bool closure_member(const Polynomial& a, const Polynomial& p);

/// Q with a + p Q == p Q, certifying a in the closure; nullopt when a is not
/// in the closure.
std::optional<Polynomial> closure_witness(const Polynomial& a, const Polynomial& p);

bool is_dense(const Polynomial& p);
bool is_closed(const Polynomial& p);

/// A and B agree on every point of V(P) where P does not take the zero value.
bool congruent_mod(const RationalPolynomial& a, const RationalPolynomial& b,
                   const RationalPolynomial& p);

/// Whether some power of q is a multiple of p.
bool radical_member(const RationalPolynomial& q, const RationalPolynomial& p);

}  // namespace tropalg
