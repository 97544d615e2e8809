#pragma once

// JSON encodings of graphs, witnesses, interval and point models, and box systems.

#include <optional>
#include <string>

#include "json.hpp"

#include "funbox/constructions.hpp"
#include "funbox/geometry.hpp"
#include "funbox/graph.hpp"
#include "funbox/interval.hpp"
#include "funbox/parameters.hpp"

namespace funbox {

using json = nlohmann::json;

/// {"n": int, "edges": [[u,v],...], "labels": {id: string}?, "family": string?}
json graph_to_json(const Graph& g, std::optional<Family> family = std::nullopt);
/// Rejects out-of-range ids, self-loops and repeated edges.
Graph graph_from_json(const json& j);

/// {"target": id, "args": [ids], "table_bits": "0101...", "origin": string}
json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);

json interval_rep_to_json(const IntervalRep& rep);
IntervalRep interval_rep_from_json(const json& j);

json point_rep_to_json(const PointRep& rep);
PointRep point_rep_from_json(const json& j);

json box_system_to_json(const BoxSystem& bs);
BoxSystem box_system_from_json(const json& j);

json points_to_json(const std::vector<Point2>& points);
std::vector<Point2> points_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace funbox
