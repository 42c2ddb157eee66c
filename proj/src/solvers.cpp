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

#include "cimsim/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "cimsim/errors.hpp"
#include "cimsim/rng.hpp"

#include "json.hpp"

namespace cimsim {

namespace {

struct Adjacency {
  std::vector<std::vector<std::pair<int, double>>> rows;
  std::vector<double> field;
  double offset = 0.0;

  explicit Adjacency(const IsingModel& m)
      : rows(static_cast<std::size_t>(m.size())),
        field(static_cast<std::size_t>(m.size()), 0.0),
        offset(m.offset()) {
    for (const Coupling& c : m.couplings()) {
      rows[static_cast<std::size_t>(c.i)].emplace_back(c.j, c.value);
      rows[static_cast<std::size_t>(c.j)].emplace_back(c.i, c.value);
    }
    if (m.has_field()) field = m.field();
  }
};

}  // namespace

BruteForceResult brute_force(const IsingModel& model, int argmin_cap) {
  const int n = model.size();
  if (n > kBruteForceMaxSpins) {
    throw capability_error("brute_force: " + std::to_string(n) + " spins exceeds the cap of " +
                           std::to_string(kBruteForceMaxSpins));
  }
  if (argmin_cap < 1) throw input_error("brute_force: argmin cap must be >= 1");

  if (n == 0) {
    return BruteForceResult{model.offset(), {SpinConfig{}}, false};
  }

  const Adjacency adj(model);
  SpinConfig spins(static_cast<std::size_t>(n), 1);
  // Local fields L_i = sum_j J_ij s_j + h_i; flipping spin i changes the
  // energy by 2 s_i L_i.
  std::vector<double> local(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double l = adj.field[static_cast<std::size_t>(i)];
    for (const auto& [j, w] : adj.rows[static_cast<std::size_t>(i)]) {
      l += w * spins[static_cast<std::size_t>(j)];
    }
    local[static_cast<std::size_t>(i)] = l;
  }
  double energy = ising_energy(model, spins);

  const auto exact = [&](const SpinConfig& s) { return ising_energy(model, s); };

  double best = energy;
  std::vector<SpinConfig> optima{spins};
  bool truncated = false;
  const double tie_eps = 1e-9;

  const std::uint64_t count = std::uint64_t(1) << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    // Gray-code order: step k flips bit ctz(k).
    const int i = std::countr_zero(k);
    energy += 2.0 * spins[static_cast<std::size_t>(i)] * local[static_cast<std::size_t>(i)];
    spins[static_cast<std::size_t>(i)] = -spins[static_cast<std::size_t>(i)];
    for (const auto& [j, w] : adj.rows[static_cast<std::size_t>(i)]) {
      local[static_cast<std::size_t>(j)] += 2.0 * w * spins[static_cast<std::size_t>(i)];
    }

    const double scale = 1.0 + std::abs(best);
    if (energy < best + tie_eps * scale) {
      // Near the running minimum: re-evaluate exactly to kill accumulated
      // round-off before classifying.
      const double e = exact(spins);
      if (e < best - tie_eps * scale) {
        best = e;
        optima.assign(1, spins);
        truncated = false;
      } else if (std::abs(e - best) <= tie_eps * scale) {
        if (static_cast<int>(optima.size()) < argmin_cap) {
          optima.push_back(spins);
        } else {
          truncated = true;
        }
      }
      energy = e;
    }
  }
  return BruteForceResult{best, std::move(optima), truncated};
}

SaResult simulated_annealing(const IsingModel& model, const AnnealSchedule& schedule) {
  if (schedule.sweeps < 1) throw input_error("simulated_annealing: sweeps must be >= 1");
  if (!(schedule.t_start >= schedule.t_end) || !(schedule.t_end > 0.0)) {
    throw input_error("simulated_annealing: need t_start >= t_end > 0");
  }
  const int n = model.size();
  if (n == 0) return SaResult{SpinConfig{}, model.offset()};

  const Adjacency adj(model);
  std::mt19937_64 eng(rng::splitmix64(schedule.seed));

  SpinConfig spins(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    spins[static_cast<std::size_t>(i)] = (eng() & 1) ? 1 : -1;
  }
  std::vector<double> local(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double l = adj.field[static_cast<std::size_t>(i)];
    for (const auto& [j, w] : adj.rows[static_cast<std::size_t>(i)]) {
      l += w * spins[static_cast<std::size_t>(j)];
    }
    local[static_cast<std::size_t>(i)] = l;
  }

  double energy = ising_energy(model, spins);
  double best_energy = energy;
  SpinConfig best = spins;

  const double ratio = schedule.t_end / schedule.t_start;
  for (int sweep = 0; sweep < schedule.sweeps; ++sweep) {
    const double frac =
        schedule.sweeps > 1 ? static_cast<double>(sweep) / (schedule.sweeps - 1) : 0.0;
    const double temperature = schedule.t_start * std::pow(ratio, frac);
    const double inv_t = 1.0 / temperature;
    for (int i = 0; i < n; ++i) {
      const double delta =
          2.0 * spins[static_cast<std::size_t>(i)] * local[static_cast<std::size_t>(i)];
      if (delta <= 0.0 || rng::uniform01(eng) < std::exp(-delta * inv_t)) {
        energy += delta;
        spins[static_cast<std::size_t>(i)] = -spins[static_cast<std::size_t>(i)];
        for (const auto& [j, w] : adj.rows[static_cast<std::size_t>(i)]) {
          local[static_cast<std::size_t>(j)] += 2.0 * w * spins[static_cast<std::size_t>(i)];
        }
        if (energy < best_energy) {
          best_energy = energy;
          best = spins;
        }
      }
    }
  }
  // Report the exact energy of the best configuration, not the drifted
  // incremental value.
  return SaResult{best, ising_energy(model, best)};
}

SuccessStats batch_stats(const SolverFn& solve, const IsingModel& model, double target_energy,
                         int runs_per_batch, int batches, std::uint64_t base_seed,
                         double granularity) {
  if (runs_per_batch < 1 || batches < 1) {
    throw input_error("batch_stats: runs_per_batch and batches must be >= 1");
  }
  const double tol =
      granularity > 0.0 ? granularity * 1e-6 : 1e-9 * (1.0 + std::abs(target_energy));

  std::map<double, int> histogram;
  std::vector<double> rates;
  rates.reserve(static_cast<std::size_t>(batches));
  for (int b = 0; b < batches; ++b) {
    int successes = 0;
    for (int r = 0; r < runs_per_batch; ++r) {
      const std::uint64_t seed = rng::derive_seed(base_seed, static_cast<std::uint64_t>(b),
                                                  static_cast<std::uint64_t>(r));
      double value = solve(model, seed);
      if (granularity > 0.0) value = std::round(value / granularity) * granularity;
      ++histogram[value];
      if (value <= target_energy + tol) ++successes;
    }
    rates.push_back(static_cast<double>(successes) / runs_per_batch);
  }

  SuccessStats stats;
  stats.runs_per_batch = runs_per_batch;
  stats.batches = batches;
  stats.target = target_energy;
  double mean = 0.0;
  for (double r : rates) mean += r;
  mean /= batches;
  stats.mean = mean;
  if (batches > 1) {
    double ss = 0.0;
    for (double r : rates) ss += (r - mean) * (r - mean);
    stats.stddev = std::sqrt(ss / (batches - 1));
  }
  stats.histogram.assign(histogram.begin(), histogram.end());
  return stats;
}

std::string success_stats_json(const SuccessStats& stats, const std::string& problem_id,
                               const std::string& solver) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [value, count] : stats.histogram) {
    hist.push_back({{"value", value}, {"count", count}});
  }
  nlohmann::json doc = {
      {"problem_id", problem_id},
      {"solver", solver},
      {"target", stats.target},
      {"runs_per_batch", stats.runs_per_batch},
      {"batches", stats.batches},
      {"mean", stats.mean},
      {"std", stats.stddev},
      {"histogram", hist},
  };
  return doc.dump(2) + "\n";
}

double threshold_cut(double gs_cut, double fraction, double granularity) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw input_error("threshold_cut: fraction must be in (0, 1]");
  }
  const double raw = fraction * gs_cut;
  if (granularity <= 0.0) return raw;
  return std::ceil(raw / granularity - 1e-9) * granularity;
}

double cut_to_energy(double total_weight, double cut) { return total_weight - 2.0 * cut; }

double energy_to_cut(double total_weight, double energy) {
  return (total_weight - energy) / 2.0;
}

double weight_granularity(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (std::rint(e.weight) != e.weight) return 0.0;
  }
  return 1.0;
}

}  // namespace cimsim
