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

#include <iosfwd>
#include <string>

#include "cimsim/ising.hpp"

// Plain-text problem formats. All three round-trip losslessly:
//
//   Graph      "p <n> <m>" header, then m lines "u v [w]" (0-indexed,
//              weight defaults to 1).
//   IsingModel "ising <n>" header, then lines "i j J" (coupling),
//              "i h" (field entry) and optionally "offset <c>".
//   QuboModel  "qubo <n>" header, same line shapes as the Ising format.
//
// Reals are written with shortest round-trip formatting.
namespace cimsim {

enum class ProblemKind { kGraph, kIsing, kQubo };

std::string format_real(double v);

Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
std::string serialize_graph(const Graph& g);

IsingModel parse_ising(std::istream& in);
IsingModel parse_ising_string(const std::string& text);
std::string serialize_ising(const IsingModel& m);

QuboModel parse_qubo(std::istream& in);
QuboModel parse_qubo_string(const std::string& text);
std::string serialize_qubo(const QuboModel& q);

// Peeks at the header token to classify a problem file.
ProblemKind detect_problem_kind(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace cimsim
