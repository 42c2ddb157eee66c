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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cimsim/ising.hpp"
#include "cimsim/rng.hpp"
#include "cimsim/solvers.hpp"

namespace cimsim {

// Linear pump ramp; normalized threshold at p = 1.
struct PumpSchedule {
  double p_start = 0.5;  // below threshold
  double p_end = 1.5;
  int rounds = 200;

  double at(int round) const;
};

enum class FeedbackMode {
  kBinary,  // feedback from the signed readout, f_i = r * sum_j J_ij sign(x_j)
  kAnalog,  // feedback from raw amplitudes,     f_i = r * sum_j J_ij x_j
};

struct CimParams {
  PumpSchedule schedule{};
  double feedback_gain = 0.7;  // r
  double noise_amp = 0.1;      // per-round additive Gaussian std dev
  double dt = 0.05;            // integration step per round
  std::uint64_t seed = 1;
  double saturation = 1.0;  // cubic coefficient
  double x0_std = -1.0;     // initial amplitude std dev; negative -> noise_amp
  FeedbackMode feedback_mode = FeedbackMode::kBinary;
  // Scale couplings by 1 / max_i sum_j |J_ij| before simulating, so the
  // feedback term stays bounded by r across edge densities.
  bool normalize_couplings = true;

  double initial_std() const { return x0_std < 0.0 ? noise_amp : x0_std; }
};

struct Trajectory {
  int rounds = 0;
  int spins = 0;
  std::vector<double> amplitudes;  // rounds x spins, row-major
  std::vector<double> energy;      // per round, of the signed readout
  SpinConfig final_config;
  double final_energy = 0.0;
  std::optional<int> rounds_to_target;  // 1-based round count, when supplied

  std::span<const double> round_amplitudes(int t) const;
};

// Signed readout; zero amplitude maps to +1 (documented tie rule).
SpinConfig readout(std::span<const double> amplitudes);

// f_i = r * sum_j J_ij s_j. Sign chosen so that injection descends the
// Hamiltonian: aligned spins on a positive coupling are reinforced.
std::vector<double> feedback_field(const IsingModel& model, const SpinConfig& spins, double r);

// One discrete round applied to a copy of `x`:
//   x_i += dt * ((p(t) - 1) x_i - sat x_i^3 + f_i) + noise_amp sqrt(dt) xi_i.
// Noise is drawn from `noise`; pass a fresh sampler for reproducible
// single-step experiments.
std::vector<double> cim_step(const std::vector<double>& x, const IsingModel& model,
                             const CimParams& params, int round, rng::NormalSampler& noise);

// Full run: amplitudes start at Normal(0, initial_std) unless `initial` is
// given. The model must be field-free (absorb_field first). Deterministic:
// identical (model, params) give bit-identical trajectories.
Trajectory simulate(const IsingModel& model, const CimParams& params,
                    std::optional<double> target_energy = std::nullopt,
                    const std::vector<double>* initial = nullptr);

// Batch success protocol with the engine as the solver handle; per-run seeds
// derive from (base_seed, batch, run).
SuccessStats run_batch(const IsingModel& model, const CimParams& params, double target_energy,
                       int runs_per_batch, int batches, std::uint64_t base_seed,
                       double granularity = 0.0);

// CSV export, header "round,x_0,...,x_{n-1},energy".
std::string trajectory_csv(const Trajectory& t);

}  // namespace cimsim
