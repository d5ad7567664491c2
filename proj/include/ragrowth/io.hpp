// Graph input formats and JSON forms of results.
//
// Integer coefficients are written as decimal strings:
//   polynomial        ["1", "4", "4"]
//   rational function {"num": [...], "den": [...]}
//   series            {"order": N, "coeffs": [...]}
//   count table       {"structure": "raag", "rows": [{"n": 1, "type": [1], "count": "2"}, ...]}
//   link profile      {"m": 5, "d": 2, "L": [5, 2, 0]}

#ifndef RAGROWTH_IO_HPP
#define RAGROWTH_IO_HPP

#include "ragrowth/graph.hpp"
#include "ragrowth/link_regular.hpp"
#include "ragrowth/rational_function.hpp"
#include "ragrowth/series.hpp"
#include "ragrowth/spherical.hpp"
#include "ragrowth/structure.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ragrowth {

using Json = nlohmann::json;

/// Parses either {"nodes": m, "edges": [[i, j], ...]} or the line format
/// "nodes m" followed by "edge i j" lines ('#' starts a comment).
/// Throws GraphError on malformed input.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
Json graph_to_json(const Graph& g);

Json to_json(const IntPolynomial& p);
Json to_json(const RationalFunction& f);
Json to_json(const Series& s);
Json to_json(const CountTable& t);
Json to_json(const LinkProfile& p);
Json to_json(const AggregatedCounts& c);
Json to_json(const RelationReport& r);

IntPolynomial polynomial_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
Series series_from_json(const Json& j);
LinkProfile link_profile_from_json(const Json& j);

}  // namespace ragrowth

#endif  // RAGROWTH_IO_HPP
