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

#include "cimsim/dopo.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cimsim/errors.hpp"

namespace cimsim {

namespace {

void check_params(const DopoParams& p) {
  if (!(p.gamma_s > 0.0)) throw input_error("dopo: gamma_s must be > 0");
  if (!(p.B > 0.0)) throw input_error("dopo: two-photon loss B must be > 0");
  if (p.S < 0.0) throw input_error("dopo: pump rate S must be >= 0");
}

// Number-basis ladder coefficients used by the elementwise generator.
struct Tables {
  int dim;
  double s_half, two_gamma, b;
  std::vector<double> lower2;   // lower2[m]  = sqrt(m (m-1)),        a^2 amplitude
  std::vector<double> raise2;   // raise2[m]  = sqrt((m+1) (m+2))
  std::vector<double> raise1;   // raise1[m]  = sqrt(m+1)
  std::vector<double> decay;    // gamma (m+n) + B/2 (m(m-1) + n(n-1)) split per index
  // decay is stored per single index: decay[m] = gamma_s * m + (B/2) m (m-1)

  Tables(const DopoParams& p, int n_max)
      : dim(n_max + 1),
        s_half(p.S / 2.0),
        two_gamma(2.0 * p.gamma_s),
        b(p.B),
        lower2(static_cast<std::size_t>(dim)),
        raise2(static_cast<std::size_t>(dim)),
        raise1(static_cast<std::size_t>(dim)),
        decay(static_cast<std::size_t>(dim)) {
    for (int m = 0; m < dim; ++m) {
      lower2[static_cast<std::size_t>(m)] = std::sqrt(double(m) * (m - 1));
      raise2[static_cast<std::size_t>(m)] = std::sqrt(double(m + 1) * (m + 2));
      raise1[static_cast<std::size_t>(m)] = std::sqrt(double(m + 1));
      decay[static_cast<std::size_t>(m)] = p.gamma_s * m + 0.5 * p.B * m * (m - 1);
    }
  }
};

// out = generator(rho), with rho entries outside [0, n_max] treated as zero.
// Works for real (symmetric) and complex (Hermitian) representations; all
// generator coefficients are real, so a real symmetric state stays real.
template <typename Mat>
void master_rhs_into(const Tables& tb, const Mat& rho, Mat& out) {
  const int d = tb.dim;
  out.resize(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      typename Mat::Scalar acc = -(tb.decay[static_cast<std::size_t>(m)] +
                                   tb.decay[static_cast<std::size_t>(n)]) *
                                 rho(m, n);
      // (S/2) [ad^2 - a^2, rho]
      if (m >= 2) acc += tb.s_half * tb.lower2[static_cast<std::size_t>(m)] * rho(m - 2, n);
      if (m + 2 < d) acc -= tb.s_half * tb.raise2[static_cast<std::size_t>(m)] * rho(m + 2, n);
      if (n + 2 < d) acc -= tb.s_half * tb.raise2[static_cast<std::size_t>(n)] * rho(m, n + 2);
      if (n >= 2) acc += tb.s_half * tb.lower2[static_cast<std::size_t>(n)] * rho(m, n - 2);
      // 2 gamma_s a rho ad
      if (m + 1 < d && n + 1 < d) {
        acc += tb.two_gamma * tb.raise1[static_cast<std::size_t>(m)] *
               tb.raise1[static_cast<std::size_t>(n)] * rho(m + 1, n + 1);
      }
      // B a^2 rho ad^2
      if (m + 2 < d && n + 2 < d) {
        acc += tb.b * tb.raise2[static_cast<std::size_t>(m)] *
               tb.raise2[static_cast<std::size_t>(n)] * rho(m + 2, n + 2);
      }
      out(m, n) = acc;
    }
  }
}

template <typename Mat>
struct Rk4Workspace {
  Mat k1, k2, k3, k4, tmp;
};

template <typename Mat>
void rk4_step(const Tables& tb, Mat& rho, double dt, Rk4Workspace<Mat>& ws) {
  master_rhs_into(tb, rho, ws.k1);
  ws.tmp = rho + (dt / 2.0) * ws.k1;
  master_rhs_into(tb, ws.tmp, ws.k2);
  ws.tmp = rho + (dt / 2.0) * ws.k2;
  master_rhs_into(tb, ws.tmp, ws.k3);
  ws.tmp = rho + dt * ws.k3;
  master_rhs_into(tb, ws.tmp, ws.k4);
  rho += (dt / 6.0) * (ws.k1 + 2.0 * ws.k2 + 2.0 * ws.k3 + ws.k4);
}

template <typename Mat>
void symmetrize(Mat& m) {
  if constexpr (std::is_same_v<typename Mat::Scalar, double>) {
    m = ((m + m.transpose()) / 2.0).eval();
  } else {
    m = ((m + m.adjoint()) / 2.0).eval();
  }
}

double real_trace(const Eigen::MatrixXd& m) { return m.trace(); }
double real_trace(const Eigen::MatrixXcd& m) { return m.trace().real(); }

double top_population(const Eigen::MatrixXd& m) { return m(m.rows() - 1, m.cols() - 1); }
double top_population(const Eigen::MatrixXcd& m) {
  return m(m.rows() - 1, m.cols() - 1).real();
}

struct LoopOutcome {
  double max_leakage = 0.0;
  long steps = 0;
};

// Core fixed-step loop shared by real and complex paths.
template <typename Mat>
LoopOutcome evolve_loop(const Tables& tb, Mat& rho, long steps, double dt,
                        const EvolveOptions& opts) {
  Rk4Workspace<Mat> ws;
  LoopOutcome outcome;
  for (long s = 0; s < steps; ++s) {
    rk4_step(tb, rho, dt, ws);
    if (opts.hermitize) symmetrize(rho);
    if (opts.renormalize) {
      const double tr = real_trace(rho);
      if (!(tr > 0.0) || !std::isfinite(tr)) {
        throw numeric_error("dopo: trace lost during evolution (step " + std::to_string(s) + ")");
      }
      rho /= tr;
    }
    outcome.max_leakage = std::max(outcome.max_leakage, top_population(rho));
    if (outcome.max_leakage > opts.leakage_limit) {
      throw numeric_error("dopo: truncation leakage " + std::to_string(outcome.max_leakage) +
                          " exceeds " + std::to_string(opts.leakage_limit) +
                          "; increase n_max");
    }
    ++outcome.steps;
  }
  return outcome;
}

void check_step_guard(const DopoParams& params, int n_max, double dt) {
  const double bound = generator_rate_bound(params, n_max);
  if (!(dt > 0.0)) throw input_error("dopo: dt must be > 0");
  if (dt * bound >= 0.1) {
    throw input_error("dopo: dt " + std::to_string(dt) + " too large for stability; need dt < " +
                      std::to_string(0.1 / bound));
  }
}

}  // namespace

// --- DensityMatrix -----------------------------------------------------------

DensityMatrix::DensityMatrix(int n_max) : dim_(n_max + 1) {
  if (n_max < 1) throw input_error("density matrix needs n_max >= 1");
  rho_ = Eigen::MatrixXcd::Zero(dim_, dim_);
}

DensityMatrix DensityMatrix::vacuum(int n_max) { return fock(n_max, 0); }

DensityMatrix DensityMatrix::fock(int n_max, int level) {
  DensityMatrix out(n_max);
  if (level < 0 || level > n_max) throw input_error("fock level outside truncation");
  out.rho_(level, level) = 1.0;
  return out;
}

DensityMatrix DensityMatrix::coherent(int n_max, std::complex<double> alpha) {
  DensityMatrix out(n_max);
  Eigen::VectorXcd amp(n_max + 1);
  amp(0) = std::exp(-0.5 * std::norm(alpha));
  for (int k = 1; k <= n_max; ++k) amp(k) = amp(k - 1) * alpha / std::sqrt(double(k));
  out.rho_ = amp * amp.adjoint();
  // Renormalize away the truncated tail so the state is a genuine density
  // matrix at this n_max.
  out.renormalize();
  return out;
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw input_error("density matrix must be square with dim >= 2");
  }
  DensityMatrix out(static_cast<int>(m.rows()) - 1);
  out.rho_ = std::move(m);
  return out;
}

double DensityMatrix::population(int level) const {
  if (level < 0 || level >= dim_) throw input_error("population level outside truncation");
  return rho_(level, level).real();
}

void DensityMatrix::hermitize() { rho_ = ((rho_ + rho_.adjoint()) / 2.0).eval(); }

void DensityMatrix::renormalize() {
  const double tr = rho_.trace().real();
  if (!(tr > 0.0) || !std::isfinite(tr)) throw numeric_error("density matrix trace is not positive");
  rho_ /= tr;
}

DensityMatrix::Health DensityMatrix::health() const {
  Health h;
  h.hermiticity_residual = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  h.trace_residual = std::abs(rho_.trace().real() - 1.0) + std::abs(rho_.trace().imag());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(((rho_ + rho_.adjoint()) / 2.0).eval());
  h.min_eigenvalue = solver.eigenvalues().minCoeff();
  return h;
}

// --- Generator ----------------------------------------------------------------

Eigen::MatrixXcd master_rhs(const DensityMatrix& rho, const DopoParams& params) {
  check_params(params);
  const Tables tb(params, rho.n_max());
  Eigen::MatrixXcd out;
  master_rhs_into(tb, rho.matrix(), out);
  return out;
}

double generator_rate_bound(const DopoParams& params, int n_max) {
  const double n = n_max;
  return 2.0 * params.gamma_s * n + params.B * n * (n - 1.0) + 2.0 * params.S * (n + 1.0);
}

// --- Time evolution --------------------------------------------------------------

EvolveResult evolve(const DensityMatrix& rho0, const DopoParams& params, double t_final,
                    double dt, const EvolveOptions& options) {
  check_params(params);
  if (t_final < 0.0) throw input_error("dopo: t_final must be >= 0");
  DensityMatrix state = rho0;
  if (t_final == 0.0) {
    const double leak = top_population(state.matrix());
    return EvolveResult{std::move(state), leak, 0};
  }
  check_step_guard(params, rho0.n_max(), dt);

  const long steps = static_cast<long>(std::ceil(t_final / dt - 1e-12));
  const double step_dt = t_final / static_cast<double>(steps);
  const Tables tb(params, rho0.n_max());

  // A real symmetric state evolves under real coefficients; integrating in
  // real arithmetic halves the work and is exact.
  const bool real_state = rho0.matrix().imag().cwiseAbs().maxCoeff() == 0.0;
  LoopOutcome outcome;
  if (real_state) {
    Eigen::MatrixXd rho = rho0.matrix().real();
    outcome = evolve_loop(tb, rho, steps, step_dt, options);
    state.matrix() = rho.cast<std::complex<double>>();
  } else {
    Eigen::MatrixXcd rho = rho0.matrix();
    outcome = evolve_loop(tb, rho, steps, step_dt, options);
    state.matrix() = std::move(rho);
  }
  return EvolveResult{std::move(state), outcome.max_leakage, outcome.steps};
}

SteadyStateResult steady_state(const DopoParams& params, int n_max,
                               const SteadyStateOptions& options) {
  check_params(params);
  if (n_max < 2) throw input_error("steady_state: n_max must be >= 2");
  const double bound = generator_rate_bound(params, n_max);
  const double dt = options.dt > 0.0 ? options.dt : 0.095 / bound;
  check_step_guard(params, n_max, dt);

  const Tables tb(params, n_max);
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  rho(0, 0) = 1.0;

  EvolveOptions eopts;  // hermitize + renormalize, default leakage limit
  const long chunk_steps =
      std::max<long>(1, static_cast<long>(std::llround(options.check_interval / dt)));

  Eigen::MatrixXd rhs;
  double elapsed = 0.0;
  long steps = 0;
  double residual = std::numeric_limits<double>::infinity();
  Rk4Workspace<Eigen::MatrixXd> ws;
  double max_leakage = 0.0;
  while (elapsed < options.t_max) {
    for (long s = 0; s < chunk_steps; ++s) {
      rk4_step(tb, rho, dt, ws);
      symmetrize(rho);
      rho /= rho.trace();
    }
    steps += chunk_steps;
    elapsed += static_cast<double>(chunk_steps) * dt;
    max_leakage = std::max(max_leakage, rho(n_max, n_max));
    if (max_leakage > eopts.leakage_limit) {
      throw numeric_error("steady_state: truncation leakage " + std::to_string(max_leakage) +
                          "; increase n_max");
    }
    master_rhs_into(tb, rho, rhs);
    residual = rhs.norm();
    if (residual < options.tol) {
      DensityMatrix state(n_max);
      state.matrix() = rho.cast<std::complex<double>>();
      return SteadyStateResult{std::move(state), residual, elapsed, steps};
    }
  }
  throw numeric_error("steady_state: no convergence within t_max = " +
                      std::to_string(options.t_max) + ", residual " + std::to_string(residual));
}

// --- Observables -------------------------------------------------------------------

double photon_number(const DensityMatrix& rho) {
  double n = 0.0;
  for (int m = 0; m < rho.dim(); ++m) n += m * rho.matrix()(m, m).real();
  return n;
}

std::complex<double> mean_field(const DensityMatrix& rho) {
  // tr[rho a] = sum_m sqrt(m+1) rho(m+1, m)
  std::complex<double> a = 0.0;
  for (int m = 0; m + 1 < rho.dim(); ++m) {
    a += std::sqrt(double(m + 1)) * rho.matrix()(m + 1, m);
  }
  return a;
}

}  // namespace cimsim
