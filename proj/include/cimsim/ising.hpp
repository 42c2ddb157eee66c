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

#include <vector>

namespace cimsim {

// Spin assignment; every entry is +1 or -1.
using SpinConfig = std::vector<int>;

bool is_valid_spin_config(const SpinConfig& spins);

// One coupling term between variables i < j.
struct Coupling {
  int i = 0;
  int j = 0;
  double value = 0.0;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

// Ising Hamiltonian
//   H(s) = -sum_{i<j} J_ij s_i s_j - sum_i h_i s_i + offset,  s_i in {+1,-1}.
//
// Couplings are sparse, canonicalized to i < j and stored exactly once per
// unordered pair. The linear field is optional (empty when absent); the
// constant offset rides along through conversions. External J matrices that
// fill both triangles must be halved before import, since this type counts
// each pair once.
class IsingModel {
 public:
  IsingModel() = default;
  explicit IsingModel(int n);

  int size() const { return n_; }

  // Inserts or overwrites the coupling for the unordered pair {i, j}.
  void set_coupling(int i, int j, double value);
  bool has_coupling(int i, int j) const;
  double coupling(int i, int j) const;  // 0 when the pair is absent

  const std::vector<Coupling>& couplings() const { return couplings_; }

  bool has_field() const { return !field_.empty(); }
  const std::vector<double>& field() const { return field_; }
  void set_field(std::vector<double> h);
  void clear_field() { field_.clear(); }

  double offset() const { return offset_; }
  void set_offset(double v) { offset_ = v; }

  // Largest row sum of |J|; the natural coupling scale of the model.
  double max_row_coupling() const;

 private:
  int n_ = 0;
  std::vector<Coupling> couplings_;  // sorted by (i, j), unique
  std::vector<double> field_;       // empty or size n_
  double offset_ = 0.0;
};

// Binary quadratic objective
//   f(x) = sum_i q_i x_i + sum_{i<j} q_ij x_i x_j + offset,  x_i in {0,1}.
class QuboModel {
 public:
  QuboModel() = default;
  explicit QuboModel(int n);

  int size() const { return n_; }

  void add_linear(int i, double value);  // accumulates
  void set_linear(int i, double value);
  double linear(int i) const;
  const std::vector<double>& linear_terms() const { return linear_; }

  void add_quadratic(int i, int j, double value);  // accumulates, i != j
  void set_quadratic(int i, int j, double value);
  bool has_quadratic(int i, int j) const;
  double quadratic(int i, int j) const;
  const std::vector<Coupling>& quadratic_terms() const { return quadratic_; }

  double offset() const { return offset_; }
  void set_offset(double v) { offset_ = v; }

 private:
  int n_ = 0;
  std::vector<double> linear_;
  std::vector<Coupling> quadratic_;  // sorted by (i, j), unique, i < j
  double offset_ = 0.0;
};

// Weighted undirected edge, u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple weighted graph for Max-Cut instances. No self loops, no duplicate
// edges; edges are canonicalized to u < v and kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int size() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(int u, int v, double weight = 1.0);  // throws on duplicates
  bool has_edge(int u, int v) const;

  double total_weight() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// --- Energy and objective evaluation -------------------------------------

double ising_energy(const IsingModel& model, const SpinConfig& spins);
double qubo_value(const QuboModel& qubo, const std::vector<int>& x);
double cut_value(const Graph& graph, const SpinConfig& partition);

// --- Exact conversions ----------------------------------------------------

// Substitutes x_i = (1 + s_i) / 2. The result reproduces the QUBO objective
// pointwise: ising_energy(out, s) == qubo_value(q, x(s)) for every s.
IsingModel qubo_to_ising(const QuboModel& qubo);

// Removes the linear field by adding one ancilla spin a = n with J_ia = h_i.
// Fixing s_a = +1 recovers the original energy; the s_a = -1 sector is the
// global spin flip of the former, so the optimal value is preserved.
IsingModel absorb_field(const IsingModel& model);

// Antiferromagnetic encoding J_uv = -w_uv. For every partition s,
//   cut_value(g, s) == (total_weight - ising_energy(out, s)) / 2.
IsingModel maxcut_to_ising(const Graph& graph);

// --- Helpers ---------------------------------------------------------------

// x_i = (1 + s_i) / 2.
std::vector<int> spins_to_binary(const SpinConfig& spins);
SpinConfig binary_to_spins(const std::vector<int>& x);

// Maps an (n+1)-spin solution of absorb_field(m) back onto m: flips the
// configuration into the ancilla = +1 gauge and drops the ancilla.
SpinConfig strip_ancilla(const SpinConfig& spins);

}  // namespace cimsim
