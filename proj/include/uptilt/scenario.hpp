#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uptilt/evaluator.hpp"
#include "uptilt/optimizer.hpp"

namespace uptilt {

enum class Scheme { optimal_hra, hra_single, random, no_ut };

const char* scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);  // throws ConfigError on unknown names

struct Scenario {
  double isd_m = 500.0;
  double h_uav_m = 100.0;
  double h_gue_m = 1.5;
  double h_gbs_down_m = 30.0;
  double h_sep_m = 1.0;
  double dt_angle_deg = 6.0;
  int n_elements = 8;
  double grid_resolution_m = 10.0;
  ChannelParams channel{};
  EicicConfig eicic{};
  Scheme scheme = Scheme::optimal_hra;
  ElementParams element{};
  GaConfig ga{};
  double single_search_step_deg = 1.0;
  std::uint64_t seed = 1;
};

/// Throws ConfigError naming the offending field.
void validate_scenario(const Scenario& s);

struct ScenarioResult {
  SirReport uav;
  SirReport gue;
  std::optional<OptResult> optimizer;  // present only for the GA scheme
  TiltVector tilts;                    // resolved up-tilt angles (empty for no_ut)
};

/// Builds layout and grids, resolves the up-tilt angles per scheme, then
/// evaluates the UAV grid and the GUE grid (GUEs associate with down-tilted
/// arrays only; up arrays act as interferers unless the scheme removes them).
ScenarioResult run_scenario(const Scenario& s, const GenerationCallback& trace = {});

struct SweepSpec {
  Scenario base;
  std::string axis;            // a scenario config key, e.g. "dt_angle"
  std::vector<double> values;
};

struct SweepRow {
  double value = 0.0;
  std::uint64_t seed = 0;
  double min_sir_usf_db = 0.0;
  double median_sir_usf_db = 0.0;
  std::optional<double> min_sir_csf_db;
  std::optional<double> median_sir_csf_db;
  RateStats rate_usf;
  RateStats rate_csf;
};

/// One run per value, rows in value order. Per-run seeds derive from the
/// master seed by hashing (axis, value), so cells are independent draws yet
/// the whole sweep reruns byte-identically.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::uint64_t derive_sweep_seed(std::uint64_t master_seed, const std::string& axis, double value);

void write_sweep_csv(std::ostream& os, const std::string& axis, const std::vector<SweepRow>& rows);

/// summary.json payload: scenario echo, per-grid aggregates, optimizer block.
std::string summary_json(const Scenario& s, const ScenarioResult& r);

}  // namespace uptilt
