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

#include "cimsim/cim.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "cimsim/errors.hpp"
#include "cimsim/io.hpp"

namespace cimsim {

double PumpSchedule::at(int round) const {
  if (rounds <= 1) return p_start;
  const double frac = static_cast<double>(round) / (rounds - 1);
  return p_start + (p_end - p_start) * frac;
}

std::span<const double> Trajectory::round_amplitudes(int t) const {
  if (t < 0 || t >= rounds) throw input_error("trajectory round out of range");
  return {amplitudes.data() + static_cast<std::size_t>(t) * spins,
          static_cast<std::size_t>(spins)};
}

SpinConfig readout(std::span<const double> amplitudes) {
  SpinConfig s(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    if (!std::isfinite(amplitudes[i])) {
      throw input_error("readout: non-finite amplitude at index " + std::to_string(i));
    }
    s[i] = amplitudes[i] < 0.0 ? -1 : 1;
  }
  return s;
}

std::vector<double> feedback_field(const IsingModel& model, const SpinConfig& spins, double r) {
  if (static_cast<int>(spins.size()) != model.size()) {
    throw input_error("feedback_field: configuration length does not match model");
  }
  if (model.has_field()) {
    throw input_error("feedback_field: model must be field-free (apply absorb_field first)");
  }
  std::vector<double> f(spins.size(), 0.0);
  for (const Coupling& c : model.couplings()) {
    f[static_cast<std::size_t>(c.i)] += r * c.value * spins[static_cast<std::size_t>(c.j)];
    f[static_cast<std::size_t>(c.j)] += r * c.value * spins[static_cast<std::size_t>(c.i)];
  }
  return f;
}

namespace {

void check_params(const CimParams& p, bool full_run) {
  if (!(p.feedback_gain > 0.0)) throw input_error("cim: feedback gain r must be > 0");
  if (p.noise_amp < 0.0) throw input_error("cim: noise amplitude must be >= 0");
  if (!(p.dt > 0.0)) throw input_error("cim: dt must be > 0");
  if (p.schedule.rounds < 1) throw input_error("cim: rounds must be >= 1");
  if (!full_run) return;
  // Full runs ramp from below threshold to above; single-step experiments may
  // hold the pump anywhere.
  if (!(p.schedule.p_start < 1.0)) throw input_error("cim: pump must start below threshold");
  if (!(p.schedule.p_end > p.schedule.p_start)) {
    throw input_error("cim: pump must ramp upward");
  }
}

// Shared update core. Couplings are pre-scaled; `x` is updated in place.
class Engine {
 public:
  Engine(const IsingModel& model, const CimParams& params)
      : params_(params), n_(model.size()), adj_(static_cast<std::size_t>(model.size())) {
    if (model.has_field()) {
      throw input_error("cim: model must be field-free (apply absorb_field first)");
    }
    double scale = 1.0;
    if (params.normalize_couplings) {
      const double row = model.max_row_coupling();
      if (row > 0.0) scale = 1.0 / row;
    }
    for (const Coupling& c : model.couplings()) {
      adj_[static_cast<std::size_t>(c.i)].emplace_back(c.j, c.value * scale);
      adj_[static_cast<std::size_t>(c.j)].emplace_back(c.i, c.value * scale);
    }
  }

  void step(std::vector<double>& x, int round, rng::NormalSampler& noise) const {
    const double p = params_.schedule.at(round);
    const double gain = p - 1.0;
    const double dt = params_.dt;
    const double noise_scale = params_.noise_amp * std::sqrt(dt);
    const double r = params_.feedback_gain;

    field_.assign(static_cast<std::size_t>(n_), 0.0);
    if (params_.feedback_mode == FeedbackMode::kBinary) {
      for (int i = 0; i < n_; ++i) {
        const double si = x[static_cast<std::size_t>(i)] < 0.0 ? -1.0 : 1.0;
        for (const auto& [j, w] : adj_[static_cast<std::size_t>(i)]) {
          field_[static_cast<std::size_t>(j)] += w * si;
        }
      }
    } else {
      for (int i = 0; i < n_; ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        for (const auto& [j, w] : adj_[static_cast<std::size_t>(i)]) {
          field_[static_cast<std::size_t>(j)] += w * xi;
        }
      }
    }

    for (int i = 0; i < n_; ++i) {
      const double xi = x[static_cast<std::size_t>(i)];
      double next = xi + dt * (gain * xi - params_.saturation * xi * xi * xi +
                               r * field_[static_cast<std::size_t>(i)]);
      if (noise_scale > 0.0) next += noise_scale * noise.normal();
      x[static_cast<std::size_t>(i)] = next;
    }

    for (int i = 0; i < n_; ++i) {
      if (!std::isfinite(x[static_cast<std::size_t>(i)])) {
        throw numeric_error("cim: amplitudes diverged at round " + std::to_string(round));
      }
    }
  }

 private:
  const CimParams params_;
  int n_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  mutable std::vector<double> field_;
};

}  // namespace

std::vector<double> cim_step(const std::vector<double>& x, const IsingModel& model,
                             const CimParams& params, int round, rng::NormalSampler& noise) {
  check_params(params, /*full_run=*/false);
  if (static_cast<int>(x.size()) != model.size()) {
    throw input_error("cim_step: amplitude length does not match model");
  }
  const Engine engine(model, params);
  std::vector<double> next = x;
  engine.step(next, round, noise);
  return next;
}

Trajectory simulate(const IsingModel& model, const CimParams& params,
                    std::optional<double> target_energy, const std::vector<double>* initial) {
  check_params(params, /*full_run=*/true);
  const int n = model.size();
  const int rounds = params.schedule.rounds;
  const Engine engine(model, params);

  rng::NormalSampler noise(rng::splitmix64(params.seed));
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  if (initial != nullptr) {
    if (static_cast<int>(initial->size()) != n) {
      throw input_error("simulate: initial amplitude length does not match model");
    }
    x = *initial;
  } else {
    const double std_dev = params.initial_std();
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = std_dev > 0.0 ? std_dev * noise.normal() : 0.0;
    }
  }

  Trajectory traj;
  traj.rounds = rounds;
  traj.spins = n;
  traj.amplitudes.reserve(static_cast<std::size_t>(rounds) * n);
  traj.energy.reserve(static_cast<std::size_t>(rounds));

  for (int t = 0; t < rounds; ++t) {
    engine.step(x, t, noise);
    traj.amplitudes.insert(traj.amplitudes.end(), x.begin(), x.end());
    const double e = ising_energy(model, readout(x));
    traj.energy.push_back(e);
    if (target_energy && !traj.rounds_to_target &&
        e <= *target_energy + 1e-9 * (1.0 + std::abs(*target_energy))) {
      traj.rounds_to_target = t + 1;
    }
  }

  traj.final_config = readout(x);
  traj.final_energy = traj.energy.empty() ? ising_energy(model, traj.final_config)
                                          : traj.energy.back();
  return traj;
}

SuccessStats run_batch(const IsingModel& model, const CimParams& params, double target_energy,
                       int runs_per_batch, int batches, std::uint64_t base_seed,
                       double granularity) {
  const SolverFn solver = [&params](const IsingModel& m, std::uint64_t seed) {
    CimParams run_params = params;
    run_params.seed = seed;
    return simulate(m, run_params).final_energy;
  };
  return batch_stats(solver, model, target_energy, runs_per_batch, batches, base_seed,
                     granularity);
}

std::string trajectory_csv(const Trajectory& t) {
  std::ostringstream out;
  out << "round";
  for (int i = 0; i < t.spins; ++i) out << ",x_" << i;
  out << ",energy\n";
  for (int round = 0; round < t.rounds; ++round) {
    out << round;
    const auto row = t.round_amplitudes(round);
    for (double v : row) out << ',' << format_real(v);
    out << ',' << format_real(t.energy[static_cast<std::size_t>(round)]) << '\n';
  }
  return out.str();
}

}  // namespace cimsim
