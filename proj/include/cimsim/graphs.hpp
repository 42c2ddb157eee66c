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

#include "cimsim/ising.hpp"

namespace cimsim {

struct MobiusSpec {
  int vertices = 0;  // even, >= 4
};

struct RandomGraphSpec {
  int vertices = 0;
  double target_density = 0.0;  // in (0, 1]
  std::uint64_t seed = 0;
};

// V-cycle plus V/2 antipodal chords, all unit weights: edges (i, i+1 mod V)
// and (i, i + V/2) for i < V/2. 3V/2 edges, 3-regular.
Graph mobius_ladder(const MobiusSpec& spec);

// G(n, m) sample: exactly round(d * V(V-1)/2) distinct unit edges, clamped to
// [1, V(V-1)/2], drawn uniformly without replacement. Pure function of the
// spec; identical seeds give identical graphs.
Graph random_graph(const RandomGraphSpec& spec);

// d = 2|E| / (n (n-1)); requires n >= 2.
double density(const Graph& g);

// Reference Max-Cut optimum for the Mobius Ladder family. Exhaustively
// optimizes over all two-arc partitions, both as raw vertex blocks and as
// phase flips of the alternating cycle coloring, each polished to a
// single-flip local optimum. For this family the best such partition is the
// global optimum (cross-checked against brute force for small V in tests).
int mobius_ladder_best_cut(int vertices);

}  // namespace cimsim
