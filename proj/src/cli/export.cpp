#include "tropalg/cli/export.hpp"

#include "tropalg/errors.hpp"

#include <sstream>

namespace tropalg::cli {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const MaxPlus& a) { return to_string(a); }

Json to_json(std::span<const Rational> point) {
  Json j = Json::array();
  for (const auto& v : point) j.push_back(to_string(v));
  return j;
}

Json to_json(const Exponent& e) {
  Json j = Json::array();
  for (auto v : e) j.push_back(v);
  return j;
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", to_json(e)}, {"coefficient", to_json(c)}});
  return {{"text", to_string(p)}, {"terms", terms}};
}

Json to_json(const RootMultiset& r) {
  Json j = Json::array();
  for (const auto& root : r.finite) j.push_back({{"root", to_string(root.value)}, {"mult", root.multiplicity}});
  if (r.bottom_multiplicity > 0) j.push_back({{"root", "-inf"}, {"mult", r.bottom_multiplicity}});
  return j;
}

Json to_json(const VarietyComplex& v) {
  Json cells = Json::array();
  for (const auto& c : v.cells) {
    cells.push_back({{"pair", {to_json(c.alpha), to_json(c.beta)}},
                     {"dimension", c.dimension},
                     {"witness", to_json(c.witness)}});
  }
  return cells;
}

namespace {

std::string monomial_text(const Exponent& e, const Rational& c) {
  return to_string(Polynomial::monomial(MaxPlus(c), e));
}

}  // namespace

Json to_json(const DominanceGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    vertices.push_back({{"term", monomial_text(v.exponent, v.coefficient)},
                        {"exponent", to_json(v.exponent)},
                        {"witness", to_json(v.witness)}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"wall", form_text(e.wall)}});
  return {{"vertices", vertices}, {"edges", edges}, {"connected", g.connected}};
}

std::string form_text(const AffineForm& f) {
  std::string out;
  auto append = [&](Rational c, const std::string& name) {
    if (c == 0) return;
    bool negative = c < 0;
    if (negative) c = -c;
    std::string body = name.empty() ? to_string(c) : (c == 1 ? name : to_string(c) + "*" + name);
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  };
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) append(f.coeffs[i], variable_name(f.dim(), i));
  append(f.constant, "");
  return out.empty() ? "0" : out;
}

BoundingBox parse_bbox(std::string_view text) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) throw UsageError("bounding box needs xmin,ymin,xmax,ymax");
  BoundingBox b{v[0], v[1], v[2], v[3]};
  if (b.xmin >= b.xmax || b.ymin >= b.ymax) throw UsageError("empty bounding box");
  return b;
}

namespace {

constexpr int kCanvas = 400;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

AffineForm axis_bound(std::size_t axis, const Rational& sign, const Rational& constant) {
  AffineForm f{std::vector<Rational>(2, Rational(0)), constant};
  f.coeffs[axis] = sign;
  return f;
}

}  // namespace

std::string variety_svg(const VarietyComplex& v, const BoundingBox& box) {
  if (v.arity != 2) throw UsageError("figures are drawn for polynomials in two variables");
  const Rational w = box.xmax - box.xmin;
  const Rational h = box.ymax - box.ymin;
  auto sx = [&](const Rational& x) { return to_fixed((x - box.xmin) / w * kCanvas, 3); };
  auto sy = [&](const Rational& y) { return to_fixed((box.ymax - y) / h * kCanvas, 3); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
      << "  <rect width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < v.cells.size(); ++i) {
    const Cell& cell = v.cells[i];
    if (cell.dimension != 1) continue;
    InequalitySystem clipped = cell.system;
    clipped.add(axis_bound(0, 1, -box.xmin), Relation::GreaterEqual);
    clipped.add(axis_bound(0, -1, box.xmax), Relation::GreaterEqual);
    clipped.add(axis_bound(1, 1, -box.ymin), Relation::GreaterEqual);
    clipped.add(axis_bound(1, -1, box.ymax), Relation::GreaterEqual);
    if (!is_strictly_feasible(clipped)) continue;
    // The tie form's normal (a, b) gives the line direction (-b, a).
    const AffineForm& tie = cell.system.constraints().front().form;
    AffineForm along{{-tie.coeffs[1], tie.coeffs[0]}, Rational(0)};
    AffineForm back{{tie.coeffs[1], -tie.coeffs[0]}, Rational(0)};
    auto p = lp_max(along, clipped).argmax;
    auto q = lp_max(back, clipped).argmax;
    out << "  <line x1=\"" << sx(p[0]) << "\" y1=\"" << sy(p[1]) << "\" x2=\"" << sx(q[0]) << "\" y2=\""
        << sy(q[1]) << "\" stroke=\"" << kPalette[i % std::size(kPalette)] << "\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string dominance_dot(const DominanceGraph& g) {
  std::ostringstream out;
  out << "graph dominance {\n";
  out << "  // connected: " << (g.connected ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    out << "  v" << i << " [label=\"" << monomial_text(v.exponent, v.coefficient) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  v" << e.from << " -- v" << e.to << " [label=\"" << form_text(e.wall) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tropalg::cli
