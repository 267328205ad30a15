#pragma once

#include "tropalg/exponent.hpp"
#include "tropalg/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tropalg {

/**
 * Concave envelope of finitely many lifted lattice points (alpha, c_alpha).
 *
 * The Newton polytope is stored by its facet inequalities inside its affine
 * hull, and the envelope as the minimum of the affine functions spanning
 * upper facets of the lifted hull. Both are found by brute force over point
 * subsets, which is fine for the supports this library deals with.
 */
class Envelope {
 public:
  explicit Envelope(std::vector<std::pair<Exponent, Rational>> points);

  std::size_t arity() const { return origin_.size(); }
  /// Dimension of the Newton polytope.
  std::size_t dimension() const { return pivots_.size(); }

  bool contains(const Exponent& g) const;
  /// Envelope value at g, nullopt outside the Newton polytope.
  std::optional<Rational> value(const Exponent& g) const;

  /// Lattice points of the Newton polytope in lexicographic order.
  std::vector<Exponent> lattice_points() const;

 private:
  std::optional<std::vector<Rational>> project(const Exponent& g) const;

  Exponent origin_;
  Exponent lo_, hi_;
  std::vector<std::vector<Rational>> basis_;  // reduced rows spanning the hull directions
  std::vector<std::size_t> pivots_;
  // h.q + b >= 0 on the polytope, stored as (h..., b)
  std::vector<std::vector<Rational>> facets_;
  // w.q + b, stored as (w..., b)
  std::vector<std::vector<Rational>> planes_;
};

}  // namespace tropalg
