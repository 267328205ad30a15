#pragma once

/**
 * Exact rational polyhedral kernel.
 *
 * Systems of affine constraints  f(y) > 0,  f(y) >= 0,  f(y) = 0  over Q^n are
 * decided by Fourier-Motzkin elimination with strictness tracking; small
 * linear programs are solved by enumerating basic solutions. Everything is
 * exact, there is no floating point here.
 */

#include "tropalg/exponent.hpp"
#include "tropalg/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tropalg {

struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant;

  std::size_t dim() const { return coeffs.size(); }
  Rational operator()(std::span<const Rational> y) const;
  AffineForm operator-(const AffineForm& other) const;
};

/// Relation of a form to zero.
enum class Relation { Greater, GreaterEqual, Equal };

struct Constraint {
  AffineForm form;
  Relation relation;

  bool satisfied_by(std::span<const Rational> y) const;
};

class InequalitySystem {
 public:
  explicit InequalitySystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool empty() const { return constraints_.empty(); }

  InequalitySystem& add(AffineForm form, Relation relation);
  InequalitySystem& append(const InequalitySystem& other);

  /// Same system with every strict inequality relaxed to >=.
  InequalitySystem closure() const;

  bool satisfied_by(std::span<const Rational> y) const;
  bool has_strict() const;

 private:
  std::size_t dim_;
  std::vector<Constraint> constraints_;
};

/// A rational point satisfying every constraint (strict ones strictly), or
/// nullopt when none exists. The witness is produced by back-substitution
/// through the elimination order, taking midpoints of open intervals.
std::optional<RationalPoint> find_witness(const InequalitySystem& system);

bool is_strictly_feasible(const InequalitySystem& system);

/// Dimension of the affine hull of the closure's solution set, -1 if empty.
int affine_dimension(const InequalitySystem& system);

struct LpSolution {
  bool unbounded = false;
  Rational value;        // meaningful when bounded
  RationalPoint argmax;  // an optimal basic solution when bounded
};

/// Maximum of `objective` over a system with only >= and = constraints.
/// Throws DomainError("infeasible") when the system has no solution.
LpSolution lp_max(const AffineForm& objective, const InequalitySystem& system);

/// Whether `target` lies in the convex hull of `points` (decided through the
/// separating-hyperplane system, which lives in dimension n + 1).
bool in_convex_hull(std::span<const Exponent> points, const Exponent& target);

/// Integer points of the convex hull, in lexicographic order.
std::vector<Exponent> lattice_points(std::span<const Exponent> points);

/// { a + b }, deduplicated and sorted.
std::vector<Exponent> minkowski_sum(std::span<const Exponent> a, std::span<const Exponent> b);

}  // namespace tropalg
