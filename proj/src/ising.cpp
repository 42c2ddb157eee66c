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

#include "cimsim/ising.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cimsim/errors.hpp"

namespace cimsim {

namespace {

void check_index(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw input_error(std::string(what) + " index " + std::to_string(i) +
                      " out of range [0, " + std::to_string(n) + ")");
  }
}

// Locates the slot for the canonical pair (i, j), i < j, in a sorted vector.
std::vector<Coupling>::iterator find_pair(std::vector<Coupling>& terms, int i, int j) {
  return std::lower_bound(terms.begin(), terms.end(), std::pair<int, int>{i, j},
                          [](const Coupling& c, const std::pair<int, int>& key) {
                            return std::pair<int, int>{c.i, c.j} < key;
                          });
}

std::vector<Coupling>::const_iterator find_pair(const std::vector<Coupling>& terms, int i,
                                                int j) {
  return std::lower_bound(terms.begin(), terms.end(), std::pair<int, int>{i, j},
                          [](const Coupling& c, const std::pair<int, int>& key) {
                            return std::pair<int, int>{c.i, c.j} < key;
                          });
}

void canonicalize_pair(int& i, int& j, int n, const char* what) {
  check_index(i, n, what);
  check_index(j, n, what);
  if (i == j) {
    throw input_error(std::string(what) + ": self-pair (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") is not allowed");
  }
  if (i > j) std::swap(i, j);
}

}  // namespace

bool is_valid_spin_config(const SpinConfig& spins) {
  return std::all_of(spins.begin(), spins.end(), [](int s) { return s == 1 || s == -1; });
}

// --- IsingModel -------------------------------------------------------------

IsingModel::IsingModel(int n) : n_(n) {
  if (n < 0) throw input_error("spin count must be non-negative");
}

void IsingModel::set_coupling(int i, int j, double value) {
  canonicalize_pair(i, j, n_, "coupling");
  auto it = find_pair(couplings_, i, j);
  if (it != couplings_.end() && it->i == i && it->j == j) {
    it->value = value;
  } else {
    couplings_.insert(it, Coupling{i, j, value});
  }
}

bool IsingModel::has_coupling(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  auto it = find_pair(couplings_, i, j);
  return it != couplings_.end() && it->i == i && it->j == j;
}

double IsingModel::coupling(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = find_pair(couplings_, i, j);
  return (it != couplings_.end() && it->i == i && it->j == j) ? it->value : 0.0;
}

void IsingModel::set_field(std::vector<double> h) {
  if (static_cast<int>(h.size()) != n_) {
    throw input_error("field length " + std::to_string(h.size()) + " does not match spin count " +
                      std::to_string(n_));
  }
  field_ = std::move(h);
}

double IsingModel::max_row_coupling() const {
  std::vector<double> row(n_, 0.0);
  for (const Coupling& c : couplings_) {
    row[c.i] += std::abs(c.value);
    row[c.j] += std::abs(c.value);
  }
  double best = 0.0;
  for (double v : row) best = std::max(best, v);
  return best;
}

// --- QuboModel ---------------------------------------------------------------

QuboModel::QuboModel(int n) : n_(n) {
  if (n < 0) throw input_error("variable count must be non-negative");
  linear_.assign(static_cast<std::size_t>(n), 0.0);
}

void QuboModel::add_linear(int i, double value) {
  check_index(i, n_, "linear");
  linear_[static_cast<std::size_t>(i)] += value;
}

void QuboModel::set_linear(int i, double value) {
  check_index(i, n_, "linear");
  linear_[static_cast<std::size_t>(i)] = value;
}

double QuboModel::linear(int i) const {
  check_index(i, n_, "linear");
  return linear_[static_cast<std::size_t>(i)];
}

void QuboModel::add_quadratic(int i, int j, double value) {
  canonicalize_pair(i, j, n_, "quadratic");
  auto it = find_pair(quadratic_, i, j);
  if (it != quadratic_.end() && it->i == i && it->j == j) {
    it->value += value;
  } else {
    quadratic_.insert(it, Coupling{i, j, value});
  }
}

void QuboModel::set_quadratic(int i, int j, double value) {
  canonicalize_pair(i, j, n_, "quadratic");
  auto it = find_pair(quadratic_, i, j);
  if (it != quadratic_.end() && it->i == i && it->j == j) {
    it->value = value;
  } else {
    quadratic_.insert(it, Coupling{i, j, value});
  }
}

bool QuboModel::has_quadratic(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  auto it = find_pair(quadratic_, i, j);
  return it != quadratic_.end() && it->i == i && it->j == j;
}

double QuboModel::quadratic(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = find_pair(quadratic_, i, j);
  return (it != quadratic_.end() && it->i == i && it->j == j) ? it->value : 0.0;
}

// --- Graph -------------------------------------------------------------------

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw input_error("vertex count must be non-negative");
}

void Graph::add_edge(int u, int v, double weight) {
  canonicalize_pair(u, v, n_, "edge");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair<int, int>{u, v},
                             [](const Edge& e, const std::pair<int, int>& key) {
                               return std::pair<int, int>{e.u, e.v} < key;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) {
    throw input_error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  edges_.insert(it, Edge{u, v, weight});
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair<int, int>{u, v},
                             [](const Edge& e, const std::pair<int, int>& key) {
                               return std::pair<int, int>{e.u, e.v} < key;
                             });
  return it != edges_.end() && it->u == u && it->v == v;
}

double Graph::total_weight() const {
  double w = 0.0;
  for (const Edge& e : edges_) w += e.weight;
  return w;
}

// --- Evaluation ----------------------------------------------------------------

namespace {

void check_spins(const SpinConfig& spins, int n, const char* what) {
  if (static_cast<int>(spins.size()) != n) {
    throw input_error(std::string(what) + ": configuration length " +
                      std::to_string(spins.size()) + " does not match size " + std::to_string(n));
  }
  if (!is_valid_spin_config(spins)) {
    throw input_error(std::string(what) + ": spins must be +1 or -1");
  }
}

}  // namespace

double ising_energy(const IsingModel& model, const SpinConfig& spins) {
  check_spins(spins, model.size(), "ising_energy");
  double e = model.offset();
  for (const Coupling& c : model.couplings()) {
    e -= c.value * spins[static_cast<std::size_t>(c.i)] * spins[static_cast<std::size_t>(c.j)];
  }
  if (model.has_field()) {
    const auto& h = model.field();
    for (int i = 0; i < model.size(); ++i) {
      e -= h[static_cast<std::size_t>(i)] * spins[static_cast<std::size_t>(i)];
    }
  }
  return e;
}

double qubo_value(const QuboModel& qubo, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != qubo.size()) {
    throw input_error("qubo_value: assignment length " + std::to_string(x.size()) +
                      " does not match variable count " + std::to_string(qubo.size()));
  }
  for (int xi : x) {
    if (xi != 0 && xi != 1) throw input_error("qubo_value: entries must be 0 or 1");
  }
  double f = qubo.offset();
  const auto& lin = qubo.linear_terms();
  for (int i = 0; i < qubo.size(); ++i) {
    if (x[static_cast<std::size_t>(i)]) f += lin[static_cast<std::size_t>(i)];
  }
  for (const Coupling& c : qubo.quadratic_terms()) {
    f += c.value * x[static_cast<std::size_t>(c.i)] * x[static_cast<std::size_t>(c.j)];
  }
  return f;
}

double cut_value(const Graph& graph, const SpinConfig& partition) {
  check_spins(partition, graph.size(), "cut_value");
  double cut = 0.0;
  for (const Edge& e : graph.edges()) {
    if (partition[static_cast<std::size_t>(e.u)] != partition[static_cast<std::size_t>(e.v)]) {
      cut += e.weight;
    }
  }
  return cut;
}

// --- Conversions ------------------------------------------------------------------

IsingModel qubo_to_ising(const QuboModel& qubo) {
  const int n = qubo.size();
  IsingModel out(n);
  std::vector<double> h(static_cast<std::size_t>(n), 0.0);
  double offset = qubo.offset();

  // q_i x_i with x = (1+s)/2 contributes q_i/2 to the offset and -(-q_i/2) s_i.
  const auto& lin = qubo.linear_terms();
  for (int i = 0; i < n; ++i) {
    h[static_cast<std::size_t>(i)] -= lin[static_cast<std::size_t>(i)] / 2.0;
    offset += lin[static_cast<std::size_t>(i)] / 2.0;
  }
  // q_ij x_i x_j = q_ij/4 (1 + s_i + s_j + s_i s_j).
  for (const Coupling& c : qubo.quadratic_terms()) {
    out.set_coupling(c.i, c.j, -c.value / 4.0);
    h[static_cast<std::size_t>(c.i)] -= c.value / 4.0;
    h[static_cast<std::size_t>(c.j)] -= c.value / 4.0;
    offset += c.value / 4.0;
  }

  const bool any_field = std::any_of(h.begin(), h.end(), [](double v) { return v != 0.0; });
  if (any_field) out.set_field(std::move(h));
  out.set_offset(offset);
  return out;
}

IsingModel absorb_field(const IsingModel& model) {
  const int n = model.size();
  IsingModel out(n + 1);
  for (const Coupling& c : model.couplings()) out.set_coupling(c.i, c.j, c.value);
  if (model.has_field()) {
    const auto& h = model.field();
    for (int i = 0; i < n; ++i) {
      if (h[static_cast<std::size_t>(i)] != 0.0) {
        out.set_coupling(i, n, h[static_cast<std::size_t>(i)]);
      }
    }
  }
  out.set_offset(model.offset());
  return out;
}

IsingModel maxcut_to_ising(const Graph& graph) {
  IsingModel out(graph.size());
  for (const Edge& e : graph.edges()) out.set_coupling(e.u, e.v, -e.weight);
  return out;
}

// --- Helpers -------------------------------------------------------------------------

std::vector<int> spins_to_binary(const SpinConfig& spins) {
  if (!is_valid_spin_config(spins)) throw input_error("spins_to_binary: spins must be +1 or -1");
  std::vector<int> x(spins.size());
  for (std::size_t i = 0; i < spins.size(); ++i) x[i] = (1 + spins[i]) / 2;
  return x;
}

SpinConfig binary_to_spins(const std::vector<int>& x) {
  SpinConfig s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && x[i] != 1) throw input_error("binary_to_spins: entries must be 0 or 1");
    s[i] = 2 * x[i] - 1;
  }
  return s;
}

SpinConfig strip_ancilla(const SpinConfig& spins) {
  if (spins.empty()) throw input_error("strip_ancilla: empty configuration");
  if (!is_valid_spin_config(spins)) throw input_error("strip_ancilla: spins must be +1 or -1");
  SpinConfig out(spins.begin(), spins.end() - 1);
  if (spins.back() == -1) {
    for (int& s : out) s = -s;
  }
  return out;
}

}  // namespace cimsim
