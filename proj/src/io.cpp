#include "funbox/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace funbox {
namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("field '") + key + "': " + e.what());
  }
}

ClosedRange range_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("range must be a [lo, hi] pair");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

json graph_to_json(const Graph& g, std::optional<Family> family) {
  json j;
  j["n"] = g.size();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) {
    json labels = json::object();
    for (VertexId v = 0; v < g.size(); ++v) labels[std::to_string(v)] = g.labels()[v];
    j["labels"] = std::move(labels);
  }
  if (family) j["family"] = std::string(to_string(*family));
  return j;
}

Graph graph_from_json(const json& j) {
  const auto n = field<std::size_t>(j, "n");
  const auto edges = field<std::vector<std::vector<long long>>>(j, "edges");
  GraphBuilder b(n);
  for (const auto& e : edges) {
    if (e.size() != 2) throw InvalidArgument("edge entries must be [u, v] pairs");
    if (e[0] < 0 || e[1] < 0 || static_cast<std::size_t>(e[0]) >= n || static_cast<std::size_t>(e[1]) >= n) {
      throw InvalidArgument("edge (" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ") out of range");
    }
    const auto u = static_cast<VertexId>(e[0]);
    const auto v = static_cast<VertexId>(e[1]);
    if (u != v && b.has_edge(u, v)) throw InvalidArgument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    b.add_edge(u, v);
  }
  if (j.contains("labels")) {
    const auto& lj = j.at("labels");
    if (!lj.is_object()) throw InvalidArgument("labels must be an object keyed by vertex id");
    std::vector<std::string> labels(n);
    for (const auto& [key, value] : lj.items()) {
      std::size_t pos = 0;
      unsigned long id = 0;
      try {
        id = std::stoul(key, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != key.size() || id >= n) throw InvalidArgument("label key '" + key + "' is not a vertex id");
      labels[id] = value.get<std::string>();
    }
    b.set_labels(std::move(labels));
  }
  return std::move(b).build();
}

json witness_to_json(const Witness& w) {
  std::string bits;
  bits.reserve(w.table.size());
  for (bool b : w.table) bits.push_back(b ? '1' : '0');
  return {{"target", w.target}, {"args", w.args}, {"table_bits", bits}, {"origin", std::string(to_string(w.origin))}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.target = field<VertexId>(j, "target");
  w.args = field<std::vector<VertexId>>(j, "args");
  const auto bits = field<std::string>(j, "table_bits");
  if (w.args.size() > kMaxTableArity || bits.size() != (std::size_t{1} << w.args.size())) {
    throw InvalidArgument("table_bits must have length 2^|args|");
  }
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("table_bits must contain only 0 and 1");
    w.table.push_back(c == '1');
  }
  w.origin = witness_origin_from_string(field<std::string>(j, "origin"));
  return w;
}

json interval_rep_to_json(const IntervalRep& rep) {
  json intervals = json::array();
  for (const auto& r : rep.intervals) intervals.push_back({r.lo, r.hi});
  return {{"scale_denominator", rep.scale_denominator}, {"intervals", std::move(intervals)}};
}

IntervalRep interval_rep_from_json(const json& j) {
  IntervalRep rep;
  rep.scale_denominator = j.contains("scale_denominator") ? field<std::int64_t>(j, "scale_denominator") : 1;
  if (!j.contains("intervals") || !j.at("intervals").is_array()) throw InvalidArgument("missing field 'intervals'");
  for (const auto& r : j.at("intervals")) rep.intervals.push_back(range_from_json(r));
  validate(rep);
  return rep;
}

json point_rep_to_json(const PointRep& rep) {
  json points = json::array();
  for (const auto& p : rep.points) points.push_back({p.left, p.right});
  return {{"points", std::move(points)}};
}

PointRep point_rep_from_json(const json& j) {
  PointRep rep;
  for (const auto& p : field<std::vector<std::vector<int>>>(j, "points")) {
    if (p.size() != 2) throw InvalidArgument("points must be [i, j] pairs");
    rep.points.push_back({p[0], p[1]});
  }
  validate(rep);
  return rep;
}

json box_system_to_json(const BoxSystem& bs) {
  json boxes = json::array();
  for (const auto& b : bs.boxes) {
    json box = json::array();
    for (const auto& r : b) box.push_back({r.lo, r.hi});
    boxes.push_back(std::move(box));
  }
  json j{{"d", bs.d}, {"scale_denominator", bs.scale_denominator}, {"boxes", std::move(boxes)}};
  if (!bs.labels.empty()) {
    json labels = json::object();
    for (std::size_t i = 0; i < bs.labels.size(); ++i) labels[std::to_string(i)] = bs.labels[i];
    j["labels"] = std::move(labels);
  }
  return j;
}

BoxSystem box_system_from_json(const json& j) {
  BoxSystem bs;
  bs.d = field<std::size_t>(j, "d");
  bs.scale_denominator = field<std::int64_t>(j, "scale_denominator");
  if (!j.contains("boxes") || !j.at("boxes").is_array()) throw InvalidArgument("missing field 'boxes'");
  for (const auto& bj : j.at("boxes")) {
    Box b;
    for (const auto& r : bj) b.push_back(range_from_json(r));
    bs.boxes.push_back(std::move(b));
  }
  if (j.contains("labels")) {
    bs.labels.assign(bs.boxes.size(), "");
    for (const auto& [key, value] : j.at("labels").items()) {
      const auto id = std::stoul(key);
      if (id >= bs.boxes.size()) throw InvalidArgument("box label key out of range");
      bs.labels[id] = value.get<std::string>();
    }
  }
  validate(bs);
  return bs;
}

json points_to_json(const std::vector<Point2>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back({p.x, p.y});
  return out;
}

std::vector<Point2> points_from_json(const json& j) {
  std::vector<Point2> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw InvalidArgument("points must be [x, y] pairs");
    out.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

}  // namespace funbox
