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

#include "cimsim/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cimsim/errors.hpp"

namespace cimsim {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw input_error("line " + std::to_string(line_no) + ": " + msg);
}

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Tokenizes non-empty, non-comment ('#') lines.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    Line line{line_no, {}};
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      line.tokens.push_back(tok);
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line_no, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  return v;
}

double parse_double(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(line_no, std::string("expected real ") + what + ", got '" + tok + "'");
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// --- Graph ---------------------------------------------------------------

Graph parse_graph(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw input_error("empty graph file");
  const Line& head = lines[0];
  if (head.tokens[0] != "p" || head.tokens.size() != 3) {
    fail(head.number, "expected header 'p <n> <m>'");
  }
  const int n = parse_int(head.tokens[1], head.number, "vertex count");
  const int m = parse_int(head.tokens[2], head.number, "edge count");
  if (n < 0 || m < 0) fail(head.number, "negative counts in header");

  Graph g(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 2 && line.tokens.size() != 3) {
      fail(line.number, "expected 'u v [w]'");
    }
    const int u = parse_int(line.tokens[0], line.number, "endpoint");
    const int v = parse_int(line.tokens[1], line.number, "endpoint");
    const double w =
        line.tokens.size() == 3 ? parse_double(line.tokens[2], line.number, "weight") : 1.0;
    try {
      g.add_edge(u, v, w);
    } catch (const input_error& e) {
      fail(line.number, e.what());
    }
  }
  if (g.edge_count() != m) {
    throw input_error("header announced " + std::to_string(m) + " edges, file has " +
                      std::to_string(g.edge_count()));
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.size() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_real(e.weight) << '\n';
  }
  return out.str();
}

// --- Ising / QUBO ------------------------------------------------------------

namespace {

// Shared body reader: lines are "i j value" (pair term), "i value" (linear
// term) or "offset value".
template <typename SetPair, typename SetLinear, typename SetOffset>
void parse_terms(const std::vector<Line>& lines, std::size_t first, SetPair&& set_pair,
                 SetLinear&& set_linear, SetOffset&& set_offset) {
  bool offset_seen = false;
  for (std::size_t k = first; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] == "offset") {
      if (line.tokens.size() != 2) fail(line.number, "expected 'offset <c>'");
      if (offset_seen) fail(line.number, "duplicate offset line");
      offset_seen = true;
      set_offset(parse_double(line.tokens[1], line.number, "offset"), line.number);
      continue;
    }
    if (line.tokens.size() == 3) {
      const int i = parse_int(line.tokens[0], line.number, "index");
      const int j = parse_int(line.tokens[1], line.number, "index");
      const double v = parse_double(line.tokens[2], line.number, "value");
      set_pair(i, j, v, line.number);
    } else if (line.tokens.size() == 2) {
      const int i = parse_int(line.tokens[0], line.number, "index");
      const double v = parse_double(line.tokens[1], line.number, "value");
      set_linear(i, v, line.number);
    } else {
      fail(line.number, "expected 'i j value', 'i value' or 'offset value'");
    }
  }
}

}  // namespace

IsingModel parse_ising(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw input_error("empty ising file");
  const Line& head = lines[0];
  if (head.tokens[0] != "ising" || head.tokens.size() != 2) {
    fail(head.number, "expected header 'ising <n>'");
  }
  const int n = parse_int(head.tokens[1], head.number, "spin count");
  if (n < 0) fail(head.number, "negative spin count");

  IsingModel m(n);
  std::vector<double> h(static_cast<std::size_t>(n), 0.0);
  bool any_field = false;
  parse_terms(
      lines, 1,
      [&](int i, int j, double v, int line_no) {
        if (m.has_coupling(i, j)) fail(line_no, "duplicate coupling");
        try {
          m.set_coupling(i, j, v);
        } catch (const input_error& e) {
          fail(line_no, e.what());
        }
      },
      [&](int i, double v, int line_no) {
        if (i < 0 || i >= n) fail(line_no, "field index out of range");
        if (any_field && h[static_cast<std::size_t>(i)] != 0.0) {
          fail(line_no, "duplicate field entry");
        }
        h[static_cast<std::size_t>(i)] = v;
        any_field = true;
      },
      [&](double v, int) { m.set_offset(v); });
  if (any_field) m.set_field(std::move(h));
  return m;
}

std::string serialize_ising(const IsingModel& m) {
  std::ostringstream out;
  out << "ising " << m.size() << '\n';
  for (const Coupling& c : m.couplings()) {
    out << c.i << ' ' << c.j << ' ' << format_real(c.value) << '\n';
  }
  if (m.has_field()) {
    const auto& h = m.field();
    for (int i = 0; i < m.size(); ++i) {
      if (h[static_cast<std::size_t>(i)] != 0.0) {
        out << i << ' ' << format_real(h[static_cast<std::size_t>(i)]) << '\n';
      }
    }
  }
  if (m.offset() != 0.0) out << "offset " << format_real(m.offset()) << '\n';
  return out.str();
}

QuboModel parse_qubo(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw input_error("empty qubo file");
  const Line& head = lines[0];
  if (head.tokens[0] != "qubo" || head.tokens.size() != 2) {
    fail(head.number, "expected header 'qubo <n>'");
  }
  const int n = parse_int(head.tokens[1], head.number, "variable count");
  if (n < 0) fail(head.number, "negative variable count");

  QuboModel q(n);
  std::vector<bool> linear_seen(static_cast<std::size_t>(n), false);
  parse_terms(
      lines, 1,
      [&](int i, int j, double v, int line_no) {
        if (q.has_quadratic(i, j)) fail(line_no, "duplicate quadratic term");
        try {
          q.set_quadratic(i, j, v);
        } catch (const input_error& e) {
          fail(line_no, e.what());
        }
      },
      [&](int i, double v, int line_no) {
        if (i < 0 || i >= n) fail(line_no, "linear index out of range");
        if (linear_seen[static_cast<std::size_t>(i)]) fail(line_no, "duplicate linear term");
        linear_seen[static_cast<std::size_t>(i)] = true;
        q.set_linear(i, v);
      },
      [&](double v, int) { q.set_offset(v); });
  return q;
}

std::string serialize_qubo(const QuboModel& q) {
  std::ostringstream out;
  out << "qubo " << q.size() << '\n';
  for (const Coupling& c : q.quadratic_terms()) {
    out << c.i << ' ' << c.j << ' ' << format_real(c.value) << '\n';
  }
  for (int i = 0; i < q.size(); ++i) {
    if (q.linear(i) != 0.0) out << i << ' ' << format_real(q.linear(i)) << '\n';
  }
  if (q.offset() != 0.0) out << "offset " << format_real(q.offset()) << '\n';
  return out.str();
}

// --- Dispatch ----------------------------------------------------------------

ProblemKind detect_problem_kind(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw input_error("empty problem file");
  in.seekg(0);
  if (tok == "p") return ProblemKind::kGraph;
  if (tok == "ising") return ProblemKind::kIsing;
  if (tok == "qubo") return ProblemKind::kQubo;
  throw input_error("unrecognized problem header '" + tok + "'");
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

IsingModel parse_ising_string(const std::string& text) {
  std::istringstream in(text);
  return parse_ising(in);
}

QuboModel parse_qubo_string(const std::string& text) {
  std::istringstream in(text);
  return parse_qubo(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << contents;
}

}  // namespace cimsim
