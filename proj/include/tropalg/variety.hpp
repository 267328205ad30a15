#pragma once

// Tropical varieties: dominance regions, tie cells and the dominance graph.

#include "tropalg/canon.hpp"
#include "tropalg/geometry.hpp"

#include <vector>

namespace tropalg {

struct DominanceRegion {
  Exponent exponent;
  Rational coefficient;
  RationalPoint witness;
};

/// The tie locus of two extremal terms where both dominate the rest.
struct Cell {
  std::size_t first, second;  // indices into the extremal terms
  Exponent alpha, beta;
  InequalitySystem system;
  int dimension;
  RationalPoint witness;
};

struct VarietyComplex {
  std::size_t arity;
  std::vector<Cell> cells;
};

struct GraphEdge {
  std::size_t from, to;  // indices into the vertex list
  AffineForm wall;       // (c_from - c_to) + (alpha_from - alpha_to).y
};

struct DominanceGraph {
  std::vector<DominanceRegion> vertices;
  std::vector<GraphEdge> edges;
  bool connected;
};

std::vector<DominanceRegion> dominance_regions(const RationalPolynomial& p);

/// Cells over unordered pairs of extremal terms with a non-empty tie locus.
VarietyComplex variety_cells(const RationalPolynomial& p);

DominanceGraph dominance_graph(const RationalPolynomial& p);

bool variety_contains_point(const RationalPolynomial& p, std::span<const Rational> x);

/// V(P) inside V(Q), points with bottom coordinates included.
bool variety_included(const RationalPolynomial& p, const RationalPolynomial& q);

/// k with L = k M, where L and M are the wall forms of the edge (a, b) in
/// the dominance graphs of p and q. Vertices are given as exponents of p;
/// the matching vertices of q are found through the region witnesses.
Rational edge_exponent(const RationalPolynomial& p, const RationalPolynomial& q, const Exponent& a,
                       const Exponent& b);

/// Terms of p whose exponent vanishes on every coordinate in `bottom`.
/// These are the terms that survive when those coordinates are sent to
/// the zero element.
Polynomial restrict_to_stratum(const Polynomial& p, const std::vector<bool>& bottom);

}  // namespace tropalg
