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

#include <complex>

#include <Eigen/Dense>

namespace cimsim {

// Single-DOPO open-system parameters, in units of the linear signal loss.
//
//   d rho / dt = (S/2) [ad^2 - a^2, rho]
//              + gamma_s (2 a rho ad - ad a rho - rho ad a)
//              + (B/2)   (2 a^2 rho ad^2 - ad^2 a^2 rho - rho ad^2 a^2)
//
// S is the squeezing / pump rate (threshold at S = gamma_s), B the
// two-photon loss rate saturating the oscillation. The pump mode is
// adiabatically eliminated: its drive F, coupling kappa and loss gamma_p
// enter only through S = kappa F / gamma_p.
struct DopoParams {
  double S = 1.0;
  double gamma_s = 1.0;
  double B = 0.2;
};

// Truncated number-basis state on |0> .. |n_max>.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_max);

  static DensityMatrix vacuum(int n_max);
  static DensityMatrix fock(int n_max, int level);
  static DensityMatrix coherent(int n_max, std::complex<double> alpha);
  static DensityMatrix from_matrix(Eigen::MatrixXcd m);

  int n_max() const { return dim_ - 1; }
  int dim() const { return dim_; }

  Eigen::MatrixXcd& matrix() { return rho_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

  double population(int level) const;
  void hermitize();
  void renormalize();

  struct Health {
    double hermiticity_residual = 0.0;  // max |rho - rho^dagger|
    double trace_residual = 0.0;        // |tr rho - 1|
    double min_eigenvalue = 0.0;
  };
  Health health() const;

 private:
  int dim_;
  Eigen::MatrixXcd rho_;
};

// Generator applied once; trace-free and Hermiticity-preserving by
// construction, exactly under truncation.
Eigen::MatrixXcd master_rhs(const DensityMatrix& rho, const DopoParams& params);

// Conservative bound on the fastest rate in the truncated generator; the
// integration step must satisfy dt * bound < 0.1.
double generator_rate_bound(const DopoParams& params, int n_max);

struct EvolveOptions {
  bool hermitize = true;
  bool renormalize = true;
  double leakage_limit = 1e-4;  // peak |n_max> population before refusing
};

struct EvolveResult {
  DensityMatrix state;
  double max_leakage = 0.0;  // peak population of the top truncation level
  long steps = 0;
};

// Fixed-step classic Runge-Kutta integration of the master equation,
// re-Hermitizing and renormalizing after every step. Throws numeric_error
// when truncation leakage exceeds the limit, input_error when dt violates
// the stability guard.
EvolveResult evolve(const DensityMatrix& rho0, const DopoParams& params, double t_final,
                    double dt, const EvolveOptions& options = {});

struct SteadyStateOptions {
  double tol = 1e-8;            // residual ||rhs||_F target
  double dt = 0.0;              // 0 -> largest step allowed by the guard
  double t_max = 400.0;         // evolution budget before giving up
  double check_interval = 0.5;  // residual test spacing, in time units
};

struct SteadyStateResult {
  DensityMatrix state;
  double residual = 0.0;
  double elapsed = 0.0;
  long steps = 0;
};

// Evolves from vacuum until ||rhs||_F < tol. Throws numeric_error with the
// residual when the budget runs out.
SteadyStateResult steady_state(const DopoParams& params, int n_max,
                               const SteadyStateOptions& options = {});

// Observables.
double photon_number(const DensityMatrix& rho);       // tr[rho ad a]
std::complex<double> mean_field(const DensityMatrix& rho);  // tr[rho a]

}  // namespace cimsim
