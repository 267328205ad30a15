// Command-line front end: parses polynomials, runs one query, prints JSON.

#include "tropalg/cli/export.hpp"
#include "tropalg/cli/expression.hpp"
#include "tropalg/ideals.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tropalg;
using namespace tropalg::cli;

namespace {

struct Globals {
  std::string convention = "log";
  std::string base = "10";

  ParseOptions options() const {
    ParseOptions o;
    if (convention == "classical") {
      o.convention = Convention::Classical;
      o.base = parse_rational(base);
      if (o.base <= 0 || o.base == 1) throw UsageError("the base must be positive and different from 1");
    }
    return o;
  }
};

// Parses every text with a shared arity, the largest any of them needs.
std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const ParseOptions& options) {
  std::vector<Expression> exprs;
  std::size_t arity = 1;
  for (const auto& t : texts) {
    exprs.push_back(parse_expression(t, options));
    arity = std::max(arity, arity_of(exprs.back()));
  }
  std::vector<Polynomial> out;
  for (const auto& e : exprs) out.push_back(to_polynomial(e, arity));
  return out;
}

Polynomial univariate(const std::string& text, const ParseOptions& options) {
  Polynomial p = parse_all({text}, options).front();
  if (p.arity() != 1) throw UsageError("this command expects a polynomial in one variable");
  return p;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

void emit(const std::string& command, Json input, Json result, Json extra = Json::object()) {
  Json j = {{"command", command}, {"input", std::move(input)}, {"result", std::move(result)}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial algebra over the max-plus rationals"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--convention", g.convention, "log (default) or classical")
      ->check(CLI::IsMember({"log", "classical"}));
  app.add_option("--base", g.base, "base of the logarithm under --convention=classical");

  std::string a, b, mod, svg, dot, bbox = "-10,-10,10,10";
  unsigned kmax = 64;

  auto* canon_cmd = app.add_subcommand("canon", "minimal and maximal representatives");
  canon_cmd->add_option("expr", a)->required();
  auto* roots_cmd = app.add_subcommand("roots", "roots with multiplicities (one variable)");
  roots_cmd->add_option("expr", a)->required();
  auto* factor_cmd = app.add_subcommand("factor", "linear factorization (one variable)");
  factor_cmd->add_option("expr", a)->required();
  auto* equal_cmd = app.add_subcommand("equal", "equality as rational polynomials");
  equal_cmd->add_option("expr1", a)->required();
  equal_cmd->add_option("expr2", b)->required();
  auto* divides_cmd = app.add_subcommand("divides", "whether expr1 divides expr2");
  divides_cmd->add_option("expr1", a)->required();
  divides_cmd->add_option("expr2", b)->required();
  auto* power_cmd = app.add_subcommand("divides-power", "smallest k with expr1 dividing expr2^k");
  power_cmd->add_option("expr1", a)->required();
  power_cmd->add_option("expr2", b)->required();
  power_cmd->add_option("--kmax", kmax, "largest power tried")->check(CLI::PositiveNumber);
  auto* radical_cmd = app.add_subcommand("radical-member", "whether expr1 is in the radical of (expr2)");
  radical_cmd->add_option("expr1", a)->required();
  radical_cmd->add_option("expr2", b)->required();
  auto* congruent_cmd = app.add_subcommand("congruent", "whether A and B are congruent modulo (P)");
  congruent_cmd->add_option("--mod", mod, "generator P")->required();
  congruent_cmd->add_option("A", a)->required();
  congruent_cmd->add_option("B", b)->required();
  auto* variety_cmd = app.add_subcommand("variety", "cells of the tropical variety");
  variety_cmd->add_option("expr", a)->required();
  variety_cmd->add_option("--svg", svg, "write a figure (two variables)");
  variety_cmd->add_option("--bbox", bbox, "xmin,ymin,xmax,ymax for the figure");
  auto* graph_cmd = app.add_subcommand("graph", "dominance graph");
  graph_cmd->add_option("expr", a)->required();
  graph_cmd->add_option("--dot", dot, "write the graph in DOT")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const ParseOptions opts = g.options();
    if (*canon_cmd) {
      auto r = canonicalize(parse_all({a}, opts).front());
      emit("canon", a, {{"min", to_json(r.min_representative())}, {"max", to_json(r.max_representative())}});
    } else if (*roots_cmd) {
      emit("roots", a, to_json(roots(univariate(a, opts))));
    } else if (*factor_cmd) {
      auto f = factor(univariate(a, opts));
      emit("factor", a, {{"leading", to_json(f.leading)}, {"roots", to_json(f.roots)}});
    } else if (*equal_cmd) {
      auto ps = parse_all({a, b}, opts);
      auto eq = rat_equal(canonicalize(ps[0]), canonicalize(ps[1]));
      Json extra = Json::object();
      if (!eq.equal) extra["witness"] = to_json(*eq.witness);
      emit("equal", {a, b}, eq.equal, extra);
    } else if (*divides_cmd) {
      auto ps = parse_all({a, b}, opts);
      auto r = divide(canonicalize(ps[1]), canonicalize(ps[0]));
      emit("divides", {a, b}, r ? to_json(r->min_representative()) : Json(nullptr));
    } else if (*power_cmd) {
      auto ps = parse_all({a, b}, opts);
      auto r = divides_power(canonicalize(ps[0]), canonicalize(ps[1]), kmax);
      if (!r) std::cerr << "no power up to " << kmax << " is divisible\n";
      emit("divides-power", {a, b},
           r ? Json{{"k", r->k}, {"cofactor", to_json(r->cofactor.min_representative())}} : Json(nullptr));
    } else if (*radical_cmd) {
      auto ps = parse_all({a, b}, opts);
      emit("radical-member", {a, b}, radical_member(canonicalize(ps[0]), canonicalize(ps[1])));
    } else if (*congruent_cmd) {
      auto ps = parse_all({mod, a, b}, opts);
      bool c = congruent_mod(canonicalize(ps[1]), canonicalize(ps[2]), canonicalize(ps[0]));
      emit("congruent", {{"mod", mod}, {"a", a}, {"b", b}}, c);
    } else if (*variety_cmd) {
      auto p = canonicalize(parse_all({a}, opts).front());
      auto v = variety_cells(p);
      if (!svg.empty()) {
        if (p.arity() != 2) throw UsageError("--svg needs a polynomial in two variables");
        write_file(svg, variety_svg(v, parse_bbox(bbox)));
      }
      emit("variety", a, to_json(v));
    } else if (*graph_cmd) {
      auto graph = dominance_graph(canonicalize(parse_all({a}, opts).front()));
      write_file(dot, dominance_dot(graph));
      emit("graph", a, to_json(graph));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
