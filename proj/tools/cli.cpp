#include "cli.hpp"

#include "ragrowth/geodesic.hpp"
#include "ragrowth/io.hpp"
#include "ragrowth/link_regular.hpp"
#include "ragrowth/spherical.hpp"
#include "ragrowth/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace ragrowth {

namespace {

constexpr int kDefaultSeriesOrder = 10;

struct Options {
  std::string graph_path;
  std::string structure;
  bool pretty = false;
  bool rational = false;
  int series_order = kDefaultSeriesOrder;
  bool series = false;
  std::string allowed;
  bool link_regular = false;
  int depth = 6;
  int order = kDefaultSeriesOrder;
};

std::size_t enumeration_cap() {
  const char* env = std::getenv("GROWTH_CAP");
  if (!env || !*env) return kDefaultEnumerationCap;
  std::size_t pos = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0' || cap == 0) {
    throw std::invalid_argument("GROWTH_CAP must be a positive integer, got \"" + std::string(env) + "\"");
  }
  return static_cast<std::size_t>(cap);
}

std::vector<int> parse_node_list(const std::string& text, const Graph& g) {
  std::vector<int> nodes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item.substr(first), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad node \"" + item + "\" in --allowed");
    }
    if (item.find_first_not_of(" \t", first + pos) != std::string::npos) {
      throw std::invalid_argument("bad node \"" + item + "\" in --allowed");
    }
    if (v < 1 || v > g.node_count()) throw std::invalid_argument("node " + std::to_string(v) + " not in graph");
    nodes.push_back(v);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

std::string pretty_series(const Series& s) {
  std::string body = IntPolynomial(s.coefficients()).to_string();
  return body + " + O(t^" + std::to_string(s.order() + 1) + ")";
}

// Rational form and/or series, as selected by --rational / --series.
void emit_function(const RationalFunction& f, const Options& o, std::ostream& out) {
  const bool want_rational = o.rational || !o.series;
  std::optional<Series> series;
  if (o.series) series = series_expand(f, o.series_order);
  if (o.pretty) {
    if (want_rational) out << f.to_string() << '\n';
    if (series) out << pretty_series(*series) << '\n';
    return;
  }
  Json j;
  if (want_rational && series) {
    j = {{"rational", to_json(f)}, {"series", to_json(*series)}};
  } else if (series) {
    j = to_json(*series);
  } else {
    j = to_json(f);
  }
  out << j.dump() << '\n';
}

int cmd_clique_poly(const Options& o, std::ostream& out) {
  const IntPolynomial p = clique_polynomial(load_graph(o.graph_path));
  out << (o.pretty ? p.to_string() : to_json(p).dump()) << '\n';
  return 0;
}

int cmd_spherical(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);
  const Structure s = parse_structure(o.structure);
  const RationalFunction f =
      o.allowed.empty() ? spherical_gf_closed(g, s) : spherical_gf_restricted(g, s, parse_node_list(o.allowed, g));
  emit_function(f, o, out);
  return 0;
}

int cmd_geodesic(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);
  const Structure s = parse_structure(o.structure);
  RationalFunction f;
  if (o.link_regular) {
    auto profile = link_regular_profile(g);
    if (!profile) throw GraphError("graph is not link-regular");
    f = geodesic_gf_link_regular(*profile, s);
  } else {
    f = geodesic_gf_exact(g, s);
  }
  emit_function(f, o, out);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.depth < 0) throw std::invalid_argument("--depth must be non-negative");
  const VerificationReport r = run_verification(load_graph(o.graph_path), o.depth, enumeration_cap());
  if (o.pretty) {
    for (const auto& c : r.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) out << ": " << c.detail;
      out << '\n';
    }
  } else {
    out << to_json(r).dump() << '\n';
  }
  return r.passed() ? 0 : 1;
}

int cmd_link_regular(const Options& o, std::ostream& out) {
  const auto profile = link_regular_profile(load_graph(o.graph_path));
  if (!profile) {
    out << "not link-regular\n";
  } else if (o.pretty) {
    out << "m = " << profile->m << ", d = " << profile->d << ", L =";
    for (long l : profile->L) out << ' ' << l;
    out << '\n';
  } else {
    out << to_json(*profile).dump() << '\n';
  }
  return 0;
}

int cmd_relations(const Options& o, std::ostream& out) {
  if (o.order < 0) throw std::invalid_argument("--order must be non-negative");
  const RelationReport r = verify_functional_relations(load_graph(o.graph_path), o.order);
  if (o.pretty) {
    out << r.checks << " checks through order " << r.order << ", " << r.mismatches.size() << " mismatches\n";
    for (const auto& m : r.mismatches) {
      out << m.relation << " [" << m.scope << "] t^" << m.n << ": " << m.expected.get_str() << " vs "
          << m.actual.get_str() << '\n';
    }
  } else {
    out << to_json(r).dump() << '\n';
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth functions of graph monoids, right-angled Artin and Coxeter groups", "ragrowth"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "Human-readable output instead of JSON");

  const std::vector<std::string> structures{"monoid", "raag", "racg"};
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("GRAPH", o.graph_path, "Graph file (JSON or line format)")->required();
    sub->fallthrough();
  };

  CLI::App* clique = app.add_subcommand("clique-poly", "Clique polynomial");
  add_graph(clique);

  auto add_function_flags = [&](CLI::App* sub) {
    sub->add_option("--structure", o.structure, "monoid, raag or racg")
        ->required()
        ->check(CLI::IsMember(structures));
    sub->add_flag("--rational", o.rational, "Print the rational function (default)");
    sub->add_option("--series", o.series_order, "Print the series up to t^N (default 10)")
        ->expected(0, 1)
        ->default_str(std::to_string(kDefaultSeriesOrder))
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* spherical = app.add_subcommand("spherical", "Spherical growth function");
  add_graph(spherical);
  add_function_flags(spherical);
  spherical->add_option("--allowed", o.allowed, "Restrict to types inside these nodes, e.g. \"1,3\"");

  CLI::App* geodesic = app.add_subcommand("geodesic", "Geodesic growth function");
  add_graph(geodesic);
  add_function_flags(geodesic);
  geodesic->add_flag("--link-regular", o.link_regular, "Use the link profile only");

  CLI::App* verify = app.add_subcommand("verify", "Check every method against brute-force enumeration");
  add_graph(verify);
  verify->add_option("--depth", o.depth, "Enumeration depth")->capture_default_str();

  CLI::App* lr = app.add_subcommand("link-regular", "Link profile, or \"not link-regular\"");
  add_graph(lr);

  CLI::App* rel = app.add_subcommand("relations", "Functional relations between the three series");
  add_graph(rel);
  rel->add_option("--order", o.order, "Series order")->capture_default_str();

  try {
    app.parse(argc, argv);
    o.series = spherical->count("--series") + geodesic->count("--series") > 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (clique->parsed()) return cmd_clique_poly(o, out);
    if (spherical->parsed()) return cmd_spherical(o, out);
    if (geodesic->parsed()) return cmd_geodesic(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (lr->parsed()) return cmd_link_regular(o, out);
    if (rel->parsed()) return cmd_relations(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace ragrowth
