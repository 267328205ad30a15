#pragma once

/**
 * Rational polynomials over max-plus Q: classes of polynomials that define
 * the same function. A class is identified by its extremal terms (the
 * vertices of the concave envelope of the lifted support); the sum of those
 * terms is the minimal representative, the envelope sampled at every lattice
 * point of the Newton polytope is the maximal one.
 */

#include "tropalg/envelope.hpp"
#include "tropalg/geometry.hpp"
#include "tropalg/polynomial.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace tropalg {

struct ExtremalTerm {
  Exponent exponent;
  Rational coefficient;
  RationalPoint witness;  // a point where this term strictly dominates the others
};

/// c + e.y, the log-domain value of the term c X^e at y.
AffineForm term_form(const Exponent& e, const Rational& c);

/// The region where term `index` of `terms` beats every other one,
/// strictly or weakly according to `relation`.
InequalitySystem dominance_system(const std::vector<std::pair<Exponent, Rational>>& terms,
                                  std::size_t index, Relation relation = Relation::Greater);

/// Finite terms of p as (exponent, log-coefficient) pairs, in exponent order.
std::vector<std::pair<Exponent, Rational>> finite_terms(const Polynomial& p);

class RationalPolynomial {
 public:
  explicit RationalPolynomial(std::size_t arity = 1);

  static RationalPolynomial zero(std::size_t arity) { return RationalPolynomial(arity); }

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  /// Sorted by exponent.
  const std::vector<ExtremalTerm>& extremal_terms() const { return terms_; }

  Polynomial min_representative() const;
  Polynomial max_representative() const;

  /// Cached concave envelope; throws DomainError on the zero class.
  const Envelope& envelope() const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

 private:
  friend RationalPolynomial canonicalize(const Polynomial& p);

  struct Cache {
    std::once_flag once;
    std::unique_ptr<Envelope> envelope;
  };

  std::size_t arity_;
  std::vector<ExtremalTerm> terms_;
  std::shared_ptr<Cache> cache_;
};

/// Terms of p that strictly dominate somewhere, each with a witness point.
/// Throws DomainError on the zero polynomial.
std::vector<ExtremalTerm> extremal_monomials(const Polynomial& p);

/// Concave envelope of p at g, computed by the mixing linear program.
MaxPlus envelope_value(const Polynomial& p, const Exponent& g);

RationalPolynomial canonicalize(const Polynomial& p);
Polynomial max_representative(const RationalPolynomial& r);
Polynomial min_representative(const RationalPolynomial& r);

RationalPolynomial rat_add(const RationalPolynomial& r, const RationalPolynomial& s);
RationalPolynomial rat_mul(const RationalPolynomial& r, const RationalPolynomial& s);
RationalPolynomial rat_pow(const RationalPolynomial& r, unsigned k);

struct EqualityResult {
  bool equal = false;
  std::optional<RationalPoint> witness;  // set when not equal
};

EqualityResult rat_equal(const RationalPolynomial& r, const RationalPolynomial& s);

/// R with rat_mul(divisor, R) == dividend, if any. Throws DomainError when
/// the divisor is zero.
std::optional<RationalPolynomial> divide(const RationalPolynomial& dividend,
                                         const RationalPolynomial& divisor);

struct PowerDivisor {
  unsigned k;
  RationalPolynomial cofactor;  // q^k = p * cofactor
};

/// Smallest k <= k_max such that p divides q^k.
std::optional<PowerDivisor> divides_power(const RationalPolynomial& p, const RationalPolynomial& q,
                                          unsigned k_max = 64);

bool power_cancel(const RationalPolynomial& p, const RationalPolynomial& q, unsigned m);

std::string to_string(const RationalPolynomial& r);

}  // namespace tropalg
