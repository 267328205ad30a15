#pragma once

// JSON, SVG and DOT renderings used by the command-line tool.

#include "tropalg/canon.hpp"
#include "tropalg/univariate.hpp"
#include "tropalg/variety.hpp"

#include <json.hpp>

#include <string>

namespace tropalg::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const MaxPlus& a);
Json to_json(std::span<const Rational> point);
Json to_json(const Exponent& e);
/// {"text": ..., "terms": [{"exponent": [...], "coefficient": "p/q"}, ...]}
Json to_json(const Polynomial& p);
/// [{"root": "3", "mult": 1}, ...], a bottom root last.
Json to_json(const RootMultiset& r);
Json to_json(const VarietyComplex& v);
Json to_json(const DominanceGraph& g);

/// "x - y + 1" style rendering of an affine form in the given arity.
std::string form_text(const AffineForm& f);

struct BoundingBox {
  Rational xmin = -10, ymin = -10, xmax = 10, ymax = 10;
};

/// "xmin,ymin,xmax,ymax"
BoundingBox parse_bbox(std::string_view text);

/// 400x400 SVG with one segment per one-dimensional cell, clipped to the box.
std::string variety_svg(const VarietyComplex& v, const BoundingBox& box);

std::string dominance_dot(const DominanceGraph& g);

}  // namespace tropalg::cli
