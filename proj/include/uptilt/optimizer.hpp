#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "uptilt/common.hpp"
#include "uptilt/evaluator.hpp"

namespace uptilt {

struct GaConfig {
  int population_size = 200;
  int iterations = 50;
  double mutation_prob = 0.1;
  // Accepted mutation draws (|u| < mutation_prob, u in (-1, 1)) are added to
  // the gene scaled by this factor. 1.0 adds the raw sub-degree draw.
  double mutation_scale = 5.0;
  std::uint64_t rng_seed = 1;
  int elitism_count = 1;
};

struct OptResult {
  TiltVector best_tilts;
  double best_fitness_db = 0.0;
  std::vector<double> fitness_history;  // best after init, then after each iteration
  std::int64_t evaluations = 0;         // fitness requests, cache hits included
};

using FitnessFn = std::function<double(const TiltVector&)>;

struct GenerationSnapshot {
  int iteration = 0;  // 0 = initial population
  double best_db = 0.0;
  double mean_db = 0.0;
  const std::vector<TiltVector>& population;
  const std::vector<double>& fitness;
};
using GenerationCallback = std::function<void(const GenerationSnapshot&)>;

/// Thread-safe fitness memo keyed on tilts quantized to 0.01 degrees.
class FitnessCache {
 public:
  explicit FitnessCache(FitnessFn fn) : fn_(std::move(fn)) {}
  double operator()(const TiltVector& tilts);
  std::int64_t unique_evaluations() const;

 private:
  FitnessFn fn_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, double> cache_;
};

/// Roulette-wheel pick: slot widths proportional to fitness shifted by
/// (min - epsilon) so dB-valued, possibly negative fitness stays usable.
int roulette_select(const std::vector<double>& fitness, Rng& rng, double epsilon = 1e-3);

/// Single-point crossover; children swap tails at a cut in [1, n-1].
std::pair<TiltVector, TiltVector> crossover_pair(const TiltVector& a, const TiltVector& b,
                                                 int cut);

/// Per-gene draw u ~ U(-1,1); genes with |u| < prob move by u * scale and are
/// clamped back into [0, 90].
void mutate_in_place(TiltVector& genes, Rng& rng, double prob, double scale);

/// Max-min up-tilt search. Random init in [0,90]^n, roulette selection,
/// single-point crossover (both children kept), additive mutation, and
/// replacement of the worst by better offspring with elitism_count survivors
/// guaranteed. Deterministic for a fixed seed regardless of worker count:
/// all randomness is drawn up front in a fixed order, fitness evaluation is
/// the only parallel section.
OptResult ga_optimize(const FitnessFn& fitness, int n_sites, const GaConfig& cfg,
                      const GenerationCallback& on_generation = {});

/// Shared-angle exhaustive search over {0, step, ..., 90}; ties keep the
/// smaller angle. Returns (angle, fitness).
std::pair<double, double> single_angle_search(const FitnessFn& fitness, int n_sites,
                                              double step_deg = 1.0);

/// One uniform draw per site in [0, 90].
std::pair<TiltVector, double> random_scheme(const FitnessFn& fitness, int n_sites,
                                            std::uint64_t rng_seed);

}  // namespace uptilt
