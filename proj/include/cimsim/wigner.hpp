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

#include <string>
#include <vector>

#include "cimsim/dopo.hpp"

namespace cimsim {

// Uniform symmetric grid over [-x_max, x_max] x [-p_max, p_max]. Zero
// extents default to 2 sqrt(n_max), wide enough for any state the
// truncation can hold; odd point counts keep the origin on the grid.
struct WignerGridSpec {
  int points_x = 101;
  int points_p = 101;
  double x_max = 0.0;
  double p_max = 0.0;
};

struct WignerGrid {
  std::vector<double> x;       // size points_x
  std::vector<double> p;       // size points_p
  std::vector<double> values;  // row-major, values[ip * x.size() + ix]
  double dx = 0.0;
  double dp = 0.0;
  double norm_residual = 0.0;   // |riemann sum - 1|
  bool undersized_grid = false;  // set when the residual exceeds 1e-3

  double at(int ix, int ip) const { return values[static_cast<std::size_t>(ip) * x.size() + ix]; }
};

// Phase-space quasi-probability W(x, p), evaluated through the displaced
// parity kernel in the truncated basis (exact for the truncated state; no
// FFT grid aliasing). Convention: alpha = (x + i p) / sqrt(2), the vacuum
// peaks at 1/pi and the grid integrates to 1.
WignerGrid wigner(const DensityMatrix& rho, const WignerGridSpec& spec = {});

// Distance along x between the two highest local maxima of the p = 0 slice;
// 0 when the slice has fewer than two local maxima.
double lobe_separation(const WignerGrid& grid);

// CSV export, header "x,p,W".
std::string wigner_csv(const WignerGrid& grid);

}  // namespace cimsim
