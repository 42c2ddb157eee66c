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

#include "cimsim/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cimsim/errors.hpp"
#include "cimsim/rng.hpp"

namespace cimsim {

Graph mobius_ladder(const MobiusSpec& spec) {
  const int v = spec.vertices;
  if (v < 4 || v % 2 != 0) {
    throw input_error("mobius_ladder: vertex count must be even and >= 4, got " +
                      std::to_string(v));
  }
  Graph g(v);
  for (int i = 0; i < v; ++i) g.add_edge(i, (i + 1) % v, 1.0);
  for (int i = 0; i < v / 2; ++i) g.add_edge(i, i + v / 2, 1.0);
  return g;
}

Graph random_graph(const RandomGraphSpec& spec) {
  const int v = spec.vertices;
  if (v < 2) throw input_error("random_graph: need at least 2 vertices");
  if (!(spec.target_density > 0.0) || spec.target_density > 1.0) {
    throw input_error("random_graph: target density must be in (0, 1]");
  }
  const std::int64_t total = static_cast<std::int64_t>(v) * (v - 1) / 2;
  std::int64_t m = std::llround(spec.target_density * static_cast<double>(total));
  m = std::clamp<std::int64_t>(m, 1, total);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(total));
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
  }

  // Partial Fisher-Yates: the first m slots become the sample.
  std::mt19937_64 eng(rng::splitmix64(spec.seed));
  for (std::int64_t k = 0; k < m; ++k) {
    const std::int64_t pick =
        k + static_cast<std::int64_t>(rng::uniform_below(eng, static_cast<std::uint64_t>(total - k)));
    std::swap(pairs[static_cast<std::size_t>(k)], pairs[static_cast<std::size_t>(pick)]);
  }
  std::sort(pairs.begin(), pairs.begin() + m);

  Graph g(v);
  for (std::int64_t k = 0; k < m; ++k) {
    g.add_edge(pairs[static_cast<std::size_t>(k)].first, pairs[static_cast<std::size_t>(k)].second,
               1.0);
  }
  return g;
}

double density(const Graph& g) {
  if (g.size() < 2) throw input_error("density: need at least 2 vertices");
  return 2.0 * static_cast<double>(g.edge_count()) /
         (static_cast<double>(g.size()) * (g.size() - 1));
}

namespace {

// Greedy single-flip polish; returns the locally optimal cut value.
double polish_cut(const Graph& g, std::vector<int>& s) {
  const int n = g.size();
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
  }
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n; ++i) {
      double gain = 0.0;
      for (const auto& [j, w] : adj[static_cast<std::size_t>(i)]) {
        gain += (s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(j)]) ? w : -w;
      }
      if (gain > 0.0) {
        s[static_cast<std::size_t>(i)] = -s[static_cast<std::size_t>(i)];
        improved = true;
      }
    }
  }
  double cut = 0.0;
  for (const Edge& e : g.edges()) {
    if (s[static_cast<std::size_t>(e.u)] != s[static_cast<std::size_t>(e.v)]) cut += e.weight;
  }
  return cut;
}

}  // namespace

int mobius_ladder_best_cut(int vertices) {
  const Graph g = mobius_ladder(MobiusSpec{vertices});
  const int n = vertices;
  double best = 0.0;
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int base = 0; base < 2; ++base) {
    // base 0: uniform background; base 1: alternating background.
    for (int a = 0; a < n; ++a) {
      for (int len = 0; len <= n / 2; ++len) {
        for (int i = 0; i < n; ++i) {
          const int bg = (base == 0) ? 1 : (i % 2 == 0 ? 1 : -1);
          const bool inside = ((i - a + n) % n) < len;
          s[static_cast<std::size_t>(i)] = inside ? -bg : bg;
        }
        best = std::max(best, polish_cut(g, s));
      }
    }
  }
  return static_cast<int>(std::lround(best));
}

}  // namespace cimsim
