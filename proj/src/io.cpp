#include "ragrowth/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace ragrowth {

namespace {

Graph graph_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GraphError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("nodes")) throw GraphError("graph JSON needs a \"nodes\" field");
  if (!j["nodes"].is_number_integer()) throw GraphError("\"nodes\" must be an integer");
  const long m = j["nodes"].get<long>();
  if (m < 0 || m > 100000) throw GraphError("\"nodes\" out of range");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw GraphError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw GraphError("each edge must be a pair of integers");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Graph(static_cast<int>(m), edges);
}

Graph graph_from_lines(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (keyword == "nodes") {
      if (m >= 0) throw GraphError(where + "repeated \"nodes\"");
      if (!(fields >> m) || m < 0) throw GraphError(where + "expected \"nodes m\"");
    } else if (keyword == "edge") {
      if (m < 0) throw GraphError(where + "\"edge\" before \"nodes\"");
      int i = 0, j = 0;
      if (!(fields >> i >> j)) throw GraphError(where + "expected \"edge i j\"");
      edges.emplace_back(i, j);
    } else {
      throw GraphError(where + "unknown directive \"" + keyword + "\"");
    }
    std::string extra;
    if (fields >> extra) throw GraphError(where + "trailing text \"" + extra + "\"");
  }
  if (m < 0) throw GraphError("missing \"nodes\" line");
  return Graph(static_cast<int>(m), edges);
}

Json integers_to_json(const std::vector<Integer>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(x.get_str());
  return arr;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("integer must be a decimal string or a JSON integer");
  Integer x;
  if (x.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("invalid integer \"" + j.get<std::string>() + "\"");
  return x;
}

std::vector<Integer> integers_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return graph_from_json_text(text);
  return graph_from_lines(text);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"nodes", g.node_count()}, {"edges", edges}};
}

Json to_json(const IntPolynomial& p) { return integers_to_json(p.coefficients()); }

Json to_json(const RationalFunction& f) {
  return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

Json to_json(const Series& s) { return {{"order", s.order()}, {"coeffs", integers_to_json(s.coefficients())}}; }

Json to_json(const CountTable& t) {
  Json rows = Json::array();
  for (const auto& [key, value] : t.entries()) {
    rows.push_back({{"n", key.first}, {"type", key.second.nodes}, {"count", value.get_str()}});
  }
  return {{"structure", std::string(to_string(t.structure()))}, {"rows", rows}};
}

Json to_json(const LinkProfile& p) { return {{"m", p.m}, {"d", p.d}, {"L", p.L}}; }

Json to_json(const AggregatedCounts& c) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < c.counts.size(); ++n) {
    for (std::size_t k = 0; k < c.counts[n].size(); ++k) {
      if (sgn(c.counts[n][k]) == 0) continue;
      rows.push_back({{"n", n}, {"k", k}, {"count", c.counts[n][k].get_str()}});
    }
  }
  return {{"structure", std::string(to_string(c.structure))}, {"rows", rows}};
}

Json to_json(const RelationReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"relation", m.relation},
                          {"scope", m.scope},
                          {"n", m.n},
                          {"expected", m.expected.get_str()},
                          {"actual", m.actual.get_str()}});
  }
  return {{"order", r.order},
          {"relations", r.relations},
          {"checks", r.checks},
          {"ok", r.ok()},
          {"mismatches", mismatches}};
}

IntPolynomial polynomial_from_json(const Json& j) { return IntPolynomial(integers_from_json(j)); }

RationalFunction rational_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational function needs \"num\" and \"den\"");
  }
  return rf_normalize(polynomial_from_json(j["num"]), polynomial_from_json(j["den"]));
}

Series series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw std::invalid_argument("series needs \"coeffs\"");
  Series s(integers_from_json(j["coeffs"]));
  if (j.contains("order") && j["order"].get<int>() != s.order()) {
    throw std::invalid_argument("series order does not match its coefficient count");
  }
  return s;
}

LinkProfile link_profile_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("d") || !j.contains("L")) {
    throw std::invalid_argument("profile needs \"m\", \"d\" and \"L\"");
  }
  LinkProfile p{j["m"].get<int>(), j["d"].get<int>(), j["L"].get<std::vector<long>>()};
  validate_profile(p);
  return p;
}

}  // namespace ragrowth
