// funbox command-line driver.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "funbox/campaign.hpp"
#include "funbox/constructions.hpp"
#include "funbox/geometry.hpp"
#include "funbox/interval.hpp"
#include "funbox/io.hpp"
#include "funbox/parameters.hpp"
#include "funbox/random.hpp"

namespace {

using namespace funbox;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& path, const json& j) { write_text_file(path, j.dump(2) + "\n"); }

std::vector<std::size_t> parse_perm(const std::string& text, std::size_t n) {
  // 1-based, comma separated
  std::vector<std::size_t> perm;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("--perm entry '" + item + "' is not an integer");
    }
    if (pos != item.size() || v < 1 || static_cast<std::size_t>(v) > n) {
      throw InvalidArgument("--perm entries must be integers in 1.." + std::to_string(n));
    }
    perm.push_back(static_cast<std::size_t>(v - 1));
  }
  if (perm.size() != n) throw InvalidArgument("--perm needs exactly n entries");
  return perm;
}

VertexId vertex_arg(const Graph& g, long long v, const char* flag) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
    throw InvalidArgument(std::string(flag) + " must be a vertex id in 0.." + std::to_string(g.size() - 1));
  }
  return static_cast<VertexId>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"funbox: functionality and symmetric difference of graphs, with generators and realizations"};
  app.set_version_flag("--version", std::string(toolkit_version()));
  app.require_subcommand(1);

  std::string out_path = "-";

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph from one of the families");
  std::string family;
  std::size_t gen_n = 0;
  std::size_t gen_k = 0;
  std::size_t gen_i = 0;
  std::string gen_perm;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("family", family, "half | abc | gk | hni | hypercube")->required();
  gen->add_option("--n", gen_n, "size parameter");
  gen->add_option("--k", gen_k, "G_k parameter");
  gen->add_option("--i", gen_i, "H^n_i level");
  gen->add_option("--perm", gen_perm, "ABC B-C order as a 1-based comma list");
  gen->add_option("--seed", gen_seed, "random ABC permutation seed");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  // compute
  auto* compute = app.add_subcommand("compute", "Exact parameters of a graph");
  std::string what;
  std::string in_path;
  long long vx = -1;
  long long vy = -1;
  bool serial = false;
  compute->add_option("what", what, "fun-vertex | fun-graph | sd-pair | sd-graph")->required();
  compute->add_option("-i,--in", in_path, "graph JSON")->required();
  compute->add_option("--vertex,--x", vx, "vertex (fun-vertex) or first vertex (sd-pair)");
  compute->add_option("--y", vy, "second vertex (sd-pair)");
  compute->add_flag("--serial", serial, "use the serial sweep");
  compute->add_option("-o,--out", out_path, "output file (default stdout)");

  // witness
  auto* witness = app.add_subcommand("witness", "Low-functionality witness for an interval model");
  std::string witness_kind;
  witness->add_option("kind", witness_kind, "interval")->required()->check(CLI::IsMember({"interval"}));
  witness->add_option("-i,--in", in_path, "interval model JSON")->required();
  witness->add_option("-o,--out", out_path, "output file (default stdout)");

  // realize
  auto* realize = app.add_subcommand("realize", "Exact geometric realizations");
  std::string realize_kind;
  std::size_t real_n = 0;
  std::size_t real_i = 0;
  realize->add_option("kind", realize_kind, "abc-units | abc-intervals | pointbox-plane | pointbox-r3")
      ->required()
      ->check(CLI::IsMember({"abc-units", "abc-intervals", "pointbox-plane", "pointbox-r3"}));
  realize->add_option("-i,--in", in_path, "ABC graph JSON with A:/B:/C: labels (abc-*)");
  realize->add_option("--n", real_n, "H^n_i parameter n (pointbox-*)");
  realize->add_option("--level", real_i, "H^n_i level i (pointbox-*)");
  realize->add_option("-o,--out", out_path, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a seeded verification campaign");
  std::string campaign;
  std::string config_path;
  verify->add_option("campaign", campaign, "campaign name")->required()->check(CLI::IsMember(campaign_names()));
  verify->add_option("--config", config_path, "campaign config JSON");
  auto* verify_out = verify->add_option("-o,--out", out_path, "report file (overrides config output)");

  // report
  auto* report = app.add_subcommand("report", "Render a JSON campaign report");
  std::string format = "md";
  report->add_option("--in", in_path, "raw JSON report")->required();
  report->add_option("--format", format, "md | json")->check(CLI::IsMember({"md", "markdown", "json"}));
  report->add_option("-o,--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Limits limits = Limits::from_env();

    if (*gen) {
      const Family f = family_from_string(family);
      Construction c;
      switch (f) {
        case Family::half:
          c = half_graph(gen_n);
          break;
        case Family::abc: {
          std::vector<std::size_t> perm = identity_permutation(gen_n);
          if (!gen_perm.empty() && gen_seed) throw InvalidArgument("--perm and --seed are mutually exclusive");
          if (!gen_perm.empty()) perm = parse_perm(gen_perm, gen_n);
          if (gen_seed) {
            SplitMix64 rng(*gen_seed);
            perm = random_permutation(gen_n, rng);
          }
          c = abc_graph(gen_n, perm);
          break;
        }
        case Family::gk:
          c = g_k(gen_k);
          break;
        case Family::hni:
          c = point_box_incidence(gen_n, gen_i);
          break;
        case Family::hypercube:
          c = hypercube(gen_n);
          break;
      }
      emit(out_path, graph_to_json(c.graph, f));
      return kExitPass;
    }

    if (*compute) {
      const Graph g = graph_from_json(read_json_file(in_path));
      const Exec exec = serial ? Exec::serial : Exec::parallel;
      json out;
      if (what == "fun-vertex") {
        const VertexId y = vertex_arg(g, vx, "--vertex");
        const FunVertexResult r = fun_vertex(g, y);
        out = {{"vertex", y}, {"fun", r.k}, {"witness", witness_to_json(r.witness)}};
      } else if (what == "fun-graph") {
        out = {{"fun_graph", fun_graph(g, limits, exec)}};
      } else if (what == "sd-pair") {
        const VertexId x = vertex_arg(g, vx, "--x");
        const VertexId y = vertex_arg(g, vy, "--y");
        out = {{"x", x}, {"y", y}, {"sd", sd_pair(g, x, y)}};
      } else if (what == "sd-graph") {
        out = {{"sd_graph", sd_graph(g, limits, exec)}};
      } else {
        throw InvalidArgument("unknown compute target '" + what + "'");
      }
      emit(out_path, out);
      return kExitPass;
    }

    if (*witness) {
      const IntervalRep rep = interval_rep_from_json(read_json_file(in_path));
      const PointRep pts = normalize(rep);
      const Witness w = find_low_fun_witness(pts);
      emit(out_path, {{"points", point_rep_to_json(pts)}, {"witness", witness_to_json(w)}});
      return kExitPass;
    }

    if (*realize) {
      if (realize_kind == "abc-units" || realize_kind == "abc-intervals") {
        if (in_path.empty()) throw InvalidArgument("realize " + realize_kind + " needs -i graph.json");
        const Graph g = graph_from_json(read_json_file(in_path));
        const AbcParts parts = abc_parts_from_labels(g);
        if (realize_kind == "abc-units") {
          const auto r = realize_abc_unit_squares(g, parts);
          emit(out_path, {{"boxes", box_system_to_json(r.boxes)}, {"equal", r.report.equal}, {"unit", r.report.unit}});
        } else {
          const auto r = realize_abc_intervals(g, parts);
          emit(out_path, {{"intervals", interval_rep_to_json(r.rep)}, {"equal", r.report.equal}});
        }
      } else {
        const auto plane = realize_pointbox_plane(real_n, real_i);
        if (realize_kind == "pointbox-plane") {
          emit(out_path, {{"points", points_to_json(plane.points)},
                          {"boxes", box_system_to_json(plane.boxes)},
                          {"equal", plane.report.equal}});
        } else {
          const BoxSystem r3 = embed_pointbox_r3(plane.points, plane.boxes);
          const bool equal = equal_labeled(graph_from_boxes(r3), plane.report.target);
          emit(out_path, {{"boxes", box_system_to_json(r3)}, {"equal", equal}});
        }
      }
      return kExitPass;
    }

    if (*verify) {
      CampaignConfig cfg;
      if (!config_path.empty()) cfg = CampaignConfig::from_json(read_json_file(config_path));
      cfg.limits = [&] {
        Limits l = cfg.limits;
        if (std::getenv("FUNBOX_MAX_N") != nullptr) l = limits;
        return l;
      }();
      if (verify_out->count() > 0) cfg.output = out_path;
      const CampaignReport rep = verify_campaign(campaign, cfg);
      const json j = rep.to_json();
      const std::string text = cfg.format == ReportFormat::json ? j.dump(2) + "\n" : render_markdown(j);
      write_text_file(cfg.output.empty() ? "-" : cfg.output, text);
      std::fprintf(stderr, "%s: %zu/%zu instances passed\n", campaign.c_str(), rep.passed(), rep.instances.size());
      return rep.all_pass() ? kExitPass : kExitFail;
    }

    if (*report) {
      const json j = read_json_file(in_path);
      if (!j.is_object() || !j.contains("instances") || !j.contains("summary")) {
        throw InvalidArgument(in_path + " is not a campaign report");
      }
      write_text_file(out_path, format == "json" ? j.dump(2) + "\n" : render_markdown(j));
      return j.at("summary").at("failed").get<std::size_t>() == 0 ? kExitPass : kExitFail;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
