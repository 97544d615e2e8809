#include "funbox/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "funbox/constructions.hpp"
#include "funbox/geometry.hpp"
#include "funbox/interval.hpp"
#include "funbox/random.hpp"

namespace funbox {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Plan {
  std::size_t count = 0;
  std::function<void(std::size_t, InstanceRecord&)> run;
};

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

Range size_range(const CampaignConfig& cfg, Range fallback) {
  if (cfg.sizes.empty()) return fallback;
  if (cfg.sizes.size() != 2 || cfg.sizes[0] < 1 || cfg.sizes[0] > cfg.sizes[1]) {
    throw InvalidArgument("sizes must be an inclusive [min, max] range with 1 <= min <= max");
  }
  return {cfg.sizes[0], cfg.sizes[1]};
}

std::vector<std::int64_t> size_list(const CampaignConfig& cfg, std::vector<std::int64_t> fallback) {
  return cfg.sizes.empty() ? fallback : cfg.sizes;
}

void check(InstanceRecord& rec, bool ok, const std::string& what) {
  if (!ok && rec.pass) {
    rec.pass = false;
    rec.detail = what;
  }
}

IntervalRep campaign_rep(SplitMix64& rng, std::size_t n, json& input) {
  // mix sparse, dense and tie-heavy coordinate ranges
  const std::uint64_t ranges[] = {std::max<std::uint64_t>(2, n / 2), 2 * n + 2, 1000};
  const std::uint64_t range = ranges[rng.below(3)];
  const std::uint64_t seed = rng.next();
  input["n"] = n;
  input["interval_seed"] = seed;
  input["coord_range"] = range;
  return random_interval_rep(n, seed, range);
}

std::vector<VertexId> neighbours_except(const Graph& g, VertexId v, VertexId other) {
  auto nb = g.neighbors(v);
  std::erase(nb, other);
  return nb;
}

// ---------------------------------------------------------------------------

Plan lemma_sd(const CampaignConfig& cfg) {
  const Range r = size_range(cfg, {1, 60});
  return {cfg.trials, [=](std::size_t i, InstanceRecord& rec) {
            SplitMix64 rng(instance_seed(cfg.seed, i));
            const auto n = static_cast<std::size_t>(rng.between(r.lo, r.hi));
            const IntervalRep rep = campaign_rep(rng, n, rec.input);
            const PointRep pts = normalize(rep);
            const bool same = equal_labeled(graph_from_points(pts), graph_from_intervals(rep));
            const auto lemma = check_sd_lemma(pts);
            rec.output["normalize_preserves_graph"] = same;
            rec.output["pairs_checked"] = lemma.pairs_checked;
            if (lemma.violation) {
              rec.output["violation"] = {{"u", lemma.violation->u}, {"v", lemma.violation->v}, {"sd", lemma.violation->sd},
                                         {"manhattan", lemma.violation->manhattan}};
            } else {
              rec.output["violation"] = nullptr;
            }
            check(rec, same, "normalize changed the graph");
            check(rec, !lemma.violation, "sd exceeds Manhattan distance - 2");
          }};
}

Plan thm_fun8(const CampaignConfig& cfg) {
  const Range r = size_range(cfg, {9, 60});
  return {cfg.trials, [=](std::size_t i, InstanceRecord& rec) {
            SplitMix64 rng(instance_seed(cfg.seed, i));
            const auto n = static_cast<std::size_t>(rng.between(r.lo, r.hi));
            const IntervalRep rep = campaign_rep(rng, n, rec.input);
            const Graph g = graph_from_intervals(rep);
            const Witness w = find_low_fun_witness(normalize(rep));
            const std::size_t cap = (n <= 8 || w.origin == WitnessOrigin::stripe_case1) ? 7 : 8;
            rec.output["target"] = w.target;
            rec.output["arity"] = w.arity();
            rec.output["origin"] = std::string(to_string(w.origin));
            check(rec, w.arity() <= cap, "witness has more than " + std::to_string(cap) + " arguments");
            check(rec, !witness_violation(g, w).has_value(), "witness mispredicts a vertex of the interval graph");
            if (n <= cfg.oracle_max_n && n <= 64) {
              const std::size_t exact = fun_vertex(g, w.target).k;
              rec.output["exact_fun"] = exact;
              check(rec, w.arity() >= exact, "witness arity below the exact functionality");
            } else {
              rec.output["exact_fun"] = nullptr;
            }
          }};
}

Plan thm_fun8_exact(const CampaignConfig& cfg) {
  const Range r = size_range(cfg, {1, 12});
  return {cfg.trials, [=](std::size_t i, InstanceRecord& rec) {
            SplitMix64 rng(instance_seed(cfg.seed, i));
            const auto n = static_cast<std::size_t>(rng.between(r.lo, r.hi));
            const Graph g = graph_from_intervals(campaign_rep(rng, n, rec.input));
            const std::size_t f = fun_graph(g, cfg.limits, Exec::serial);
            rec.output["fun_graph"] = f;
            check(rec, f <= 8, "interval graph with functionality above 8");
          }};
}

Plan gk_sd(const CampaignConfig& cfg) {
  const auto ks = size_list(cfg, {2, 3, 4});
  return {ks.size(), [=](std::size_t i, InstanceRecord& rec) {
            const auto k = static_cast<std::size_t>(ks[i]);
            rec.input["k"] = k;
            const Construction gk = g_k(k);
            const Graph& g = gk.graph;
            std::size_t min_sd = g.size();
            bool counts_match = true;
            const auto t = static_cast<VertexId>(k * k * k);
            const auto nb = static_cast<VertexId>(k * k * k * k);
            for (VertexId u = 0; u < g.size(); ++u) {
              for (VertexId v = u + 1; v < g.size(); ++v) {
                min_sd = std::min(min_sd, sd_pair(g, u, v));
                if (u < t || v < t || u >= t + nb || v >= t + nb) continue;
                std::int64_t in_a = 0;
                std::int64_t in_c = 0;
                for (VertexId a = 0; a < t; ++a) in_a += g.adjacent(a, u) != g.adjacent(a, v);
                for (VertexId c = t + nb; c < g.size(); ++c) in_c += g.adjacent(c, u) != g.adjacent(c, v);
                const auto& lu = gk.labels.vertices[u];
                const auto& lv = gk.labels.vertices[v];
                counts_match = counts_match && in_a == std::abs(lu.bx - lv.bx) && in_c == std::abs(lu.by - lv.by);
              }
            }
            rec.output["vertices"] = g.size();
            rec.output["min_pair_sd"] = min_sd;
            rec.output["coordinate_counts_match"] = counts_match;
            check(rec, min_sd >= k, "some pair has symmetric difference below k");
            check(rec, counts_match, "distinguisher counts differ from coordinate gaps");
          }};
}

Plan gk_abc(const CampaignConfig& cfg) {
  const auto ks = size_list(cfg, {2, 3});
  return {ks.size(), [=](std::size_t i, InstanceRecord& rec) {
            const auto k = static_cast<std::size_t>(ks[i]);
            rec.input["k"] = k;
            const Construction gk = g_k(k);
            const AbcExtension ext = extend_gk_to_abc(gk);
            const auto parts = abc_parts(ext.abc.labels);
            const AbcOrders orders = check_abc_partition(ext.abc.graph, parts.a, parts.b, parts.c);
            const auto sub = induced_subgraph(ext.abc.graph, VertexSet::of(ext.abc.graph.size(), ext.embedding));
            const bool reinduced = equal_labeled(sub.graph, gk.graph);
            bool interleaved = true;
            const std::size_t t = k * k * k;
            for (std::size_t j = 0; j < t; ++j) {
              interleaved = interleaved && orders.c[k * j] == static_cast<VertexId>(gk.graph.size() - t + j);
            }
            rec.output["vertices"] = ext.abc.graph.size();
            rec.output["reinduces_gk"] = reinduced;
            rec.output["c_order_interleaved"] = interleaved;
            check(rec, ext.abc.graph.size() == 3 * k * k * k * k, "extension has the wrong size");
            check(rec, reinduced, "embedded vertices do not induce G_k");
            check(rec, interleaved, "C' order does not place original C vertices every k steps");
          }};
}

Plan hni(const CampaignConfig& cfg) {
  const auto max_n = size_list(cfg, {4}).front();
  if (max_n < 1) throw InvalidArgument("hni needs a positive maximum n");
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(max_n); ++n)
    for (std::size_t i = 1; i <= n; ++i) cases.emplace_back(n, i);
  return {cases.size(), [=](std::size_t idx, InstanceRecord& rec) {
            const auto [n, i] = cases[idx];
            rec.input = {{"n", n}, {"i", i}};
            const Construction h = point_box_incidence(n, i);
            std::size_t points = 1;
            for (std::size_t e = 0; e < i; ++e) points *= n;
            const std::size_t boxes = i * points / n;
            const auto pset = h.labels.part(Part::point);
            const auto bset = h.labels.part(Part::box);
            bool degrees = true;
            for (VertexId v = 0; v < h.graph.size(); ++v) degrees = degrees && h.graph.degree(v) == (pset.contains(v) ? i : n);
            const bool k22 = is_k2p_free(h.graph, 2);
            const bool tri = is_triangle_free(h.graph);
            const auto plane = realize_pointbox_plane(n, i);
            const BoxSystem r3 = embed_pointbox_r3(plane.points, plane.boxes);
            const bool r3_equal = equal_labeled(graph_from_boxes(r3), h.graph);
            rec.output = {{"points", pset.count()},     {"boxes", bset.count()}, {"degrees_ok", degrees},
                          {"k22_free", k22},            {"triangle_free", tri},  {"plane_equal", plane.report.equal},
                          {"r3_equal", r3_equal}};
            check(rec, pset.count() == points, "|P| != n^i");
            check(rec, bset.count() == boxes, "|Box| != i n^(i-1)");
            check(rec, degrees, "a point has degree != i or a box degree != n");
            check(rec, k22, "not K_{2,2}-free");
            check(rec, tri, "not triangle-free");
            check(rec, plane.report.equal, "plane realization differs");
            check(rec, r3_equal, "R^3 embedding differs");
          }};
}

Plan refute(const CampaignConfig& cfg) {
  struct Subject {
    std::string name;
    Graph graph;
    std::size_t p;
    std::vector<PremiseReport> premises;  // one per premise-valid k
  };
  auto subjects = std::make_shared<std::vector<Subject>>();
  subjects->push_back({"Q4", hypercube(4).graph, 3, {}});
  subjects->push_back({"H^4_4", point_box_incidence(4, 4).graph, 2, {}});
  for (auto& s : *subjects) {
    for (std::size_t k = 1; k * s.p + 1 <= s.graph.min_degree(); ++k) {
      auto rep = check_refutation_premises(s.graph, k, s.p);
      if (rep.ok()) s.premises.push_back(std::move(rep));
    }
    if (s.premises.empty()) throw InvalidArgument(s.name + " admits no premise-valid k");
  }
  const std::size_t per = cfg.trials;
  return {per * subjects->size(), [=](std::size_t i, InstanceRecord& rec) {
            const Subject& s = (*subjects)[i / per];
            SplitMix64 rng(instance_seed(cfg.seed, i));
            const PremiseReport& prem = s.premises[rng.below(s.premises.size())];
            const auto n = s.graph.size();
            const auto x = static_cast<VertexId>(rng.below(n));
            VertexSet set(n);
            while (set.count() < prem.k) {
              const auto v = static_cast<VertexId>(rng.below(n));
              if (v != x) set.insert(v);
            }
            const RefutationPair pair = refute_function(s.graph, prem, x, set);
            const FunctionCheck fc = is_function_of(s.graph, x, set);
            bool same_profile = true;
            for (VertexId v : set.members()) same_profile = same_profile && s.graph.adjacent(v, pair.u) == s.graph.adjacent(v, pair.w);
            rec.input = {{"graph", s.name}, {"x", x}, {"S", set.members()}, {"k", prem.k}, {"p", prem.p}};
            rec.output = {{"u", pair.u}, {"w", pair.w}, {"is_function_of", fc.holds}};
            check(rec, s.graph.adjacent(x, pair.u) && !s.graph.adjacent(x, pair.w), "u must be a neighbour and w a non-neighbour of x");
            check(rec, same_profile, "u and w are distinguished by S");
            check(rec, !fc.holds, "x is a function of S after all");
          }};
}

Plan abc_realize(const CampaignConfig& cfg) {
  const Range r = size_range(cfg, {1, 50});
  return {cfg.trials, [=](std::size_t i, InstanceRecord& rec) {
            SplitMix64 rng(instance_seed(cfg.seed, i));
            const auto n = static_cast<std::size_t>(rng.between(r.lo, r.hi));
            std::vector<std::size_t> perm = identity_permutation(n);
            const char* kind = "identity";
            if (i % 3 == 1) {
              std::reverse(perm.begin(), perm.end());
              kind = "reversal";
            } else if (i % 3 == 2) {
              perm = random_permutation(n, rng);
              kind = "random";
            }
            rec.input = {{"n", n}, {"perm_kind", kind}, {"perm", perm}};
            const Construction abc = abc_graph(n, perm);
            const auto parts = abc_parts(abc.labels);
            const auto squares = realize_abc_unit_squares(abc.graph, parts);
            const auto intervals = realize_abc_intervals(abc.graph, parts);
            const bool squares_equal = equal_labeled(graph_from_boxes(squares.boxes), abc.graph);
            const bool intervals_equal = equal_labeled(graph_from_intervals(intervals.rep), abc.graph);
            const Witness w = find_low_fun_witness(normalize(intervals.rep));
            rec.output = {{"squares_equal", squares_equal}, {"unit", squares.report.unit}, {"intervals_equal", intervals_equal},
                          {"witness_arity", w.arity()}, {"witness_origin", std::string(to_string(w.origin))}};
            check(rec, squares_equal, "unit squares do not realize the graph");
            check(rec, squares.report.unit, "a square is not unit");
            check(rec, intervals_equal, "intervals do not realize the graph");
            check(rec, w.arity() <= 8 && !witness_violation(abc.graph, w), "interval witness invalid or above 8");
          }};
}

Graph plant_pair(const Graph& base, SplitMix64& rng, const char*& planted) {
  // optionally overwrite the last vertex as a twin or anti-twin of vertex 0
  const std::size_t n = base.size();
  const auto mode = rng.below(3);
  if (n < 2 || mode == 0) {
    planted = "none";
    return base;
  }
  planted = mode == 1 ? "twin" : "anti-twin";
  const auto last = static_cast<VertexId>(n - 1);
  GraphBuilder b(n);
  for (auto [u, v] : base.edges())
    if (u != last && v != last) b.add_edge(u, v);
  for (VertexId z = 1; z < last; ++z) {
    const bool adj0 = base.adjacent(0, z);
    if (mode == 1 ? adj0 : !adj0) b.add_edge(last, z);
  }
  if (rng.below(2) == 1) b.add_edge(0, last);
  return std::move(b).build();
}

Plan fun_sd_bound(const CampaignConfig& cfg) {
  const Range r = size_range(cfg, {1, 12});
  return {cfg.trials, [=](std::size_t i, InstanceRecord& rec) {
            SplitMix64 rng(instance_seed(cfg.seed, i));
            const auto n = static_cast<std::size_t>(rng.between(r.lo, r.hi));
            const auto num = rng.between(1, 7);
            const auto graph_seed = rng.next();
            const char* planted = "none";
            const Graph g = plant_pair(random_graph(n, static_cast<std::uint64_t>(num), 8, graph_seed), rng, planted);
            rec.input = {{"n", n}, {"p_num", num}, {"p_den", 8}, {"graph_seed", graph_seed}, {"planted", planted}};

            std::vector<std::size_t> fun(n);
            for (VertexId y = 0; y < n; ++y) {
              fun[y] = fun_vertex(g, y).k;
              const std::size_t deg = g.degree(y);
              check(rec, fun[y] <= deg, "fun exceeds degree at vertex " + std::to_string(y));
              check(rec, fun[y] <= n - 1 - deg, "fun exceeds non-degree at vertex " + std::to_string(y));
            }
            std::size_t twins = 0;
            std::size_t anti = 0;
            for (VertexId x = 0; x < n; ++x) {
              for (VertexId y = 0; y < n; ++y) {
                if (x == y) continue;
                const std::size_t sd = sd_pair(g, x, y);
                check(rec, fun[x] <= sd + 1, "fun(x) > sd(x,y) + 1");
                check(rec, sd == sd_pair(g, y, x), "sd is not symmetric");
                const Witness wd = pair_witness(g, x, y, PairMode::distinguishers);
                check(rec, wd.arity() == sd + 1, "distinguisher witness arity != sd + 1");
                const Witness wn = pair_witness(g, x, y, PairMode::nondistinguishers);
                check(rec, wn.arity() == n - 2 - sd + 1, "non-distinguisher witness arity != n - 1 - sd");
                if (x > y) continue;
                const auto nx = neighbours_except(g, x, y);
                const auto ny = neighbours_except(g, y, x);
                if (nx == ny) {
                  ++twins;
                  check(rec, sd == 0, "twins with nonzero sd");
                }
                std::vector<VertexId> merged;
                std::merge(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(merged));
                const std::set<VertexId> uni(merged.begin(), merged.end());
                if (uni.size() == merged.size() && merged.size() == n - 2 - (uni.count(x) + uni.count(y))) {
                  ++anti;
                  check(rec, sd == n - 2, "anti-twins with sd != n - 2");
                }
              }
            }
            rec.output = {{"fun", fun}, {"twin_pairs", twins}, {"anti_twin_pairs", anti}};
          }};
}

Plan threshold_fun0(const CampaignConfig& cfg) {
  const Range r = size_range(cfg, {1, 9});
  return {cfg.trials, [=](std::size_t i, InstanceRecord& rec) {
            SplitMix64 rng(instance_seed(cfg.seed, i));
            const auto n = static_cast<std::size_t>(rng.between(r.lo, r.hi));
            const bool from_threshold = i % 2 == 0;
            const Graph g = from_threshold ? random_threshold_graph(n, rng) : random_graph(n, 1, 2, rng.next());
            rec.input = {{"n", n}, {"generator", from_threshold ? "threshold" : "bernoulli-1/2"}, {"edges", graph_to_json(g)["edges"]}};
            const std::size_t f = fun_graph(g, cfg.limits, Exec::serial);
            const bool thr = is_threshold(g);
            rec.output = {{"fun_graph", f}, {"threshold", thr}};
            check(rec, (f == 0) == thr, "fun(G) = 0 disagrees with threshold recognition");
          }};
}

Plan hypercube_campaign(const CampaignConfig& cfg) {
  const auto max_n = size_list(cfg, {6}).front();
  if (max_n < 1 || max_n > static_cast<std::int64_t>(kMaxHypercubeDim)) throw InvalidArgument("hypercube dimension out of range");
  return {static_cast<std::size_t>(max_n), [=](std::size_t i, InstanceRecord& rec) {
            const std::size_t n = i + 1;
            rec.input["n"] = n;
            const Graph g = hypercube(n).graph;
            const bool k23 = is_k2p_free(g, 3);
            const bool tri = is_triangle_free(g);
            rec.output = {{"vertices", g.size()}, {"edges", g.edge_count()}, {"k23_free", k23}, {"triangle_free", tri}};
            check(rec, g.edge_count() == n * (std::size_t{1} << (n - 1)), "edge count != n 2^(n-1)");
            check(rec, g.min_degree() == n && g.max_degree() == n, "not n-regular");
            check(rec, k23, "not K_{2,3}-free");
            check(rec, tri, "not triangle-free");
            if (n == 3) {
              bool anti = true;
              for (VertexId v = 0; v < g.size(); ++v) {
                const auto r = fun_vertex(g, v);
                anti = anti && r.k == 1 && r.witness.args == std::vector<VertexId>{v ^ 7U} && r.witness.table == std::vector<bool>{true, false};
              }
              rec.output["antipodal_witnesses"] = anti;
              check(rec, anti, "Q3 vertex without the antipodal negation witness");
            }
            if (n == 4) {
              const bool ok = check_refutation_premises(g, 1, 3).ok();
              rec.output["refutation_premises_k1_p3"] = ok;
              check(rec, ok, "Q4 fails the refutation premises for k=1, p=3");
            }
          }};
}

const std::vector<std::pair<std::string, std::function<Plan(const CampaignConfig&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Plan(const CampaignConfig&)>>> r = {
      {"lemma-sd", lemma_sd},
      {"thm-fun8", thm_fun8},
      {"thm-fun8-exact", thm_fun8_exact},
      {"gk-sd", gk_sd},
      {"gk-abc", gk_abc},
      {"hni", hni},
      {"refute", refute},
      {"abc-realize", abc_realize},
      {"fun-sd-bound", fun_sd_bound},
      {"threshold-fun0", threshold_fun0},
      {"hypercube", hypercube_campaign},
  };
  return r;
}

}  // namespace

std::string_view toolkit_version() { return FUNBOX_VERSION; }

CampaignConfig CampaignConfig::from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("campaign config must be a JSON object");
  CampaignConfig cfg;
  try {
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<std::int64_t>>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::size_t>();
    if (j.contains("limits")) {
      const auto& l = j.at("limits");
      if (l.contains("fun_max_n")) cfg.limits.fun_max_n = l.at("fun_max_n").get<std::size_t>();
      if (l.contains("sd_max_n")) cfg.limits.sd_max_n = l.at("sd_max_n").get<std::size_t>();
    }
    if (j.contains("oracle_max_n")) cfg.oracle_max_n = j.at("oracle_max_n").get<std::size_t>();
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
    if (j.contains("format")) {
      const auto f = j.at("format").get<std::string>();
      if (f == "json") cfg.format = ReportFormat::json;
      else if (f == "markdown" || f == "md") cfg.format = ReportFormat::markdown;
      else throw InvalidArgument("format must be json or markdown");
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed campaign config: ") + e.what());
  }
  if (cfg.trials < 1) throw InvalidArgument("trials must be at least 1");
  if (cfg.limits.fun_max_n > kSweepCeiling || cfg.limits.sd_max_n > kSweepCeiling) {
    throw InvalidArgument("limits exceed the sweep ceiling of " + std::to_string(kSweepCeiling));
  }
  return cfg;
}

json CampaignConfig::to_json() const {
  return {{"seed", seed},
          {"sizes", sizes},
          {"trials", trials},
          {"limits", {{"fun_max_n", limits.fun_max_n}, {"sd_max_n", limits.sd_max_n}}},
          {"oracle_max_n", oracle_max_n},
          {"output", output},
          {"format", format == ReportFormat::json ? "json" : "markdown"}};
}

std::size_t CampaignReport::passed() const {
  return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [](const auto& r) { return r.pass; }));
}

json CampaignReport::to_json() const {
  json inst = json::array();
  for (const auto& r : instances) {
    inst.push_back({{"index", r.index},
                    {"input", r.input},
                    {"output", r.output},
                    {"pass", r.pass},
                    {"detail", r.detail},
                    {"elapsed_ms", r.elapsed_ms}});
  }
  return {{"campaign", campaign},
          {"version", version},
          {"config", config},
          {"instances", std::move(inst)},
          {"summary", {{"total", instances.size()}, {"passed", passed()}, {"failed", failed()}}},
          {"elapsed_ms", elapsed_ms}};
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CampaignReport verify_campaign(std::string_view name, const CampaignConfig& cfg) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end()) throw InvalidArgument("unknown campaign '" + std::string(name) + "'");
  if (cfg.trials < 1) throw InvalidArgument("trials must be at least 1");

  const auto start = Clock::now();
  const Plan plan = it->second(cfg);
  CampaignReport report;
  report.campaign = std::string(name);
  report.version = std::string(toolkit_version());
  report.config = cfg.to_json();
  report.instances.resize(plan.count);

  const auto count = static_cast<long long>(plan.count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    auto& rec = report.instances[static_cast<std::size_t>(i)];
    rec.index = static_cast<std::size_t>(i);
    rec.pass = true;
    const auto t0 = Clock::now();
    try {
      plan.run(rec.index, rec);
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.detail = std::string("exception: ") + e.what();
    }
    rec.elapsed_ms = ms_since(t0);
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

std::string render_markdown(const json& report) {
  std::ostringstream out;
  const auto& summary = report.at("summary");
  out << "# Campaign `" << report.value("campaign", "?") << "`\n\n";
  out << "- toolkit version: " << report.value("version", "?") << "\n";
  out << "- seed: " << report.at("config").value("seed", std::uint64_t{0}) << "\n";
  out << "- instances: " << summary.at("total").get<std::size_t>() << " (" << summary.at("passed").get<std::size_t>()
      << " passed, " << summary.at("failed").get<std::size_t>() << " failed)\n\n";
  out << "| # | pass | input | output | detail |\n|---|---|---|---|---|\n";
  for (const auto& r : report.at("instances")) {
    out << "| " << r.at("index").get<std::size_t>() << " | " << (r.at("pass").get<bool>() ? "yes" : "**no**") << " | `"
        << r.at("input").dump() << "` | `" << r.at("output").dump() << "` | " << r.value("detail", "") << " |\n";
  }
  return out.str();
}

}  // namespace funbox
