// Copyright 2026 The cimsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cimsim/ising.hpp"

namespace cimsim {

// Exhaustive enumeration is refused above this size.
inline constexpr int kBruteForceMaxSpins = 24;

struct BruteForceResult {
  double min_energy = 0.0;
  std::vector<SpinConfig> optima;  // all global minima, up to the cap
  bool optima_truncated = false;   // true when more optima existed than the cap
};

// Exact global minimum over all 2^n configurations (Gray-code sweep with
// incremental energy updates; candidate minima re-evaluated from scratch).
BruteForceResult brute_force(const IsingModel& model, int argmin_cap = 64);

// Geometric temperature ladder from t_start down to t_end.
struct AnnealSchedule {
  int sweeps = 1000;
  double t_start = 3.0;
  double t_end = 0.05;
  std::uint64_t seed = 0;
};

struct SaResult {
  SpinConfig config;
  double energy = 0.0;
};

// Single-spin-flip Metropolis over the schedule's temperature ladder;
// returns the best configuration seen. Deterministic given the seed.
SaResult simulated_annealing(const IsingModel& model, const AnnealSchedule& schedule);

// Batch success-rate protocol: `batches` independent batches of
// `runs_per_batch` runs each; a run succeeds when its objective is at or
// below the target energy. Mean/std are taken across batch success rates.
struct SuccessStats {
  int runs_per_batch = 0;
  int batches = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double target = 0.0;
  std::vector<std::pair<double, int>> histogram;  // objective value -> count
};

// A solver handle returns the achieved energy for one seeded run.
using SolverFn = std::function<double(const IsingModel&, std::uint64_t seed)>;

// Per-run seeds derive statelessly from (base_seed, batch, run). When
// `granularity` > 0, objective values are rounded to that grid before the
// threshold comparison and histogram binning (integer grid for unit-weight
// graphs), avoiding float-equality traps.
SuccessStats batch_stats(const SolverFn& solve, const IsingModel& model, double target_energy,
                         int runs_per_batch, int batches, std::uint64_t base_seed,
                         double granularity = 0.0);

std::string success_stats_json(const SuccessStats& stats, const std::string& problem_id,
                               const std::string& solver);

// Relaxed-threshold arithmetic: the smallest cut on the weight grid that
// still counts as reaching `fraction` of the ground-state cut (ceiling).
double threshold_cut(double gs_cut, double fraction, double granularity = 1.0);

// Cut <-> energy identity for maxcut_to_ising models: E = W - 2 * cut.
double cut_to_energy(double total_weight, double cut);
double energy_to_cut(double total_weight, double energy);

// 1.0 when all edge weights are integral, else 0 (no rounding).
double weight_granularity(const Graph& g);

}  // namespace cimsim
