#pragma once

// Named, seeded verification campaigns. Each campaign generates its instances
// from (seed, instance index) alone, runs them on a worker pool, and assembles
// the report in instance order.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "funbox/io.hpp"
#include "funbox/parameters.hpp"

namespace funbox {

enum class ReportFormat { json, markdown };

struct CampaignConfig {
  std::uint64_t seed = 1;
  /// Campaign-specific: an inclusive [min, max] vertex range, a list of k, or a
  /// single maximum. Empty means the campaign default.
  std::vector<std::int64_t> sizes;
  std::size_t trials = 100;
  Limits limits;
  /// thm-fun8 compares witness arity with exact fun_vertex up to this many vertices.
  std::size_t oracle_max_n = 25;
  std::string output;
  ReportFormat format = ReportFormat::json;

  /// Missing keys keep their defaults; malformed values throw InvalidArgument.
  static CampaignConfig from_json(const json& j);
  json to_json() const;
};

struct InstanceRecord {
  std::size_t index = 0;
  json input = json::object();
  json output = json::object();
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct CampaignReport {
  std::string campaign;
  std::string version;
  json config;
  std::vector<InstanceRecord> instances;
  double elapsed_ms = 0.0;

  std::size_t passed() const;
  std::size_t failed() const { return instances.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
  json to_json() const;
};

const std::vector<std::string>& campaign_names();

/// Throws InvalidArgument for an unknown campaign name or invalid configuration.
CampaignReport verify_campaign(std::string_view name, const CampaignConfig& cfg);

/// Markdown rendering of a JSON report produced by CampaignReport::to_json.
std::string render_markdown(const json& report);

std::string_view toolkit_version();

}  // namespace funbox
