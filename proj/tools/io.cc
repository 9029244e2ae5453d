// Copyright 2026 The Robustfair Authors.
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

#include "io.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "robustfair/errors.h"
#include "robustfair/rational.h"

namespace robustfair::io {
namespace {

[[noreturn]] void Fail(const std::string& name, int line,
                       const std::string& msg) {
  throw InputError(name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

long long ToInt(const std::string& tok, const std::string& name, int line) {
  long long value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    Fail(name, line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

int ToVertex(const std::string& tok, const std::string& name, int line,
             int n) {
  const long long v = ToInt(tok, name, line);
  if (v < 0 || (n >= 0 && v >= n) || v > (1 << 30)) {
    Fail(name, line, "vertex " + tok + " out of range");
  }
  return static_cast<int>(v);
}

// Next non-empty line split into tokens; false at end of input.
bool NextRecord(std::istream& in, int& line, std::vector<std::string>& toks) {
  std::string text;
  while (std::getline(in, text)) {
    ++line;
    toks = Tokens(text);
    if (!toks.empty()) return true;
  }
  return false;
}

}  // namespace

void Fnv1a::Update(const std::string& bytes) {
  for (unsigned char c : bytes) {
    h_ ^= c;
    h_ *= 0x100000001b3ULL;
  }
}

std::string Fnv1a::Hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h_));
  return buf;
}

std::string HashHex(const std::string& bytes) {
  Fnv1a h;
  h.Update(bytes);
  return h.Hex();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

DirectedGraph ReadGraph(std::istream& in, const std::string& name) {
  int line = 0;
  std::vector<std::string> toks;
  if (!NextRecord(in, line, toks)) Fail(name, line, "missing header 'n m'");
  if (toks.size() != 2) Fail(name, line, "header must be 'n m'");
  const long long n = ToInt(toks[0], name, line);
  const long long m = ToInt(toks[1], name, line);
  if (n < 0 || m < 0 || n > (1 << 30)) Fail(name, line, "bad header counts");
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  while (NextRecord(in, line, toks)) {
    if (toks.size() != 2) Fail(name, line, "edge line must be 'tail head'");
    const int u = ToVertex(toks[0], name, line, static_cast<int>(n));
    const int v = ToVertex(toks[1], name, line, static_cast<int>(n));
    if (u == v) Fail(name, line, "self loop");
    if (!seen.insert({u, v}).second) Fail(name, line, "duplicate edge");
    if (static_cast<long long>(edges.size()) == m) {
      Fail(name, line, "more edges than the header says");
    }
    edges.push_back({u, v});
  }
  if (static_cast<long long>(edges.size()) != m) {
    Fail(name, line, "header says " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return DirectedGraph(static_cast<int>(n), std::move(edges));
}

void WriteGraph(std::ostream& out, const DirectedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
}

std::vector<VertexPair> ReadPairs(std::istream& in, const std::string& name,
                                  int num_vertices) {
  int line = 0;
  std::vector<std::string> toks;
  std::vector<VertexPair> out;
  while (NextRecord(in, line, toks)) {
    if (toks.size() != 2) Fail(name, line, "pair line must be 's t'");
    out.push_back({ToVertex(toks[0], name, line, num_vertices),
                   ToVertex(toks[1], name, line, num_vertices)});
  }
  return out;
}

void WritePairs(std::ostream& out, const std::vector<VertexPair>& pairs) {
  for (const VertexPair& p : pairs) out << p.s << ' ' << p.t << '\n';
}

ClusteringFile ReadClustering(std::istream& in, const std::string& name) {
  int line = 0;
  std::vector<std::string> toks;
  std::vector<std::pair<int, std::pair<int, int>>> rows;
  std::optional<bool> with_color;
  while (NextRecord(in, line, toks)) {
    if (toks.size() != 2 && toks.size() != 3) {
      Fail(name, line, "line must be 'vertex cluster [color]'");
    }
    const bool has = toks.size() == 3;
    if (with_color && *with_color != has) {
      Fail(name, line, "color column present on some lines only");
    }
    with_color = has;
    const int v = ToVertex(toks[0], name, line, -1);
    const long long c = ToInt(toks[1], name, line);
    if (c < 0 || c > (1 << 30)) Fail(name, line, "negative cluster label");
    int color = 0;
    if (has) {
      const long long col = ToInt(toks[2], name, line);
      if (col < 0 || col > (1 << 20)) Fail(name, line, "bad color");
      color = static_cast<int>(col);
    }
    rows.push_back({v, {static_cast<int>(c), color}});
  }
  const int n = static_cast<int>(rows.size());
  std::vector<int> assignment(n, -1), colors(n, 0);
  for (const auto& [v, rest] : rows) {
    if (v >= n) {
      Fail(name, line, "vertex " + std::to_string(v) +
                           " out of range for " + std::to_string(n) +
                           " lines");
    }
    if (assignment[v] >= 0) {
      Fail(name, line, "vertex " + std::to_string(v) + " listed twice");
    }
    assignment[v] = rest.first;
    colors[v] = rest.second;
  }
  ClusteringFile out;
  out.clustering = Clustering(assignment);
  if (with_color.value_or(false)) out.colors = std::move(colors);
  return out;
}

void WriteClustering(std::ostream& out, const Clustering& c,
                     const std::vector<int>* colors) {
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    out << v << ' ' << c.cluster_of(v);
    if (colors != nullptr) out << ' ' << (*colors)[v];
    out << '\n';
  }
}

std::vector<int> ReadColors(std::istream& in, const std::string& name) {
  int line = 0;
  std::vector<std::string> toks;
  std::vector<std::pair<int, int>> rows;
  while (NextRecord(in, line, toks)) {
    if (toks.size() != 2) Fail(name, line, "line must be 'vertex color'");
    const long long col = ToInt(toks[1], name, line);
    if (col < 0 || col > (1 << 20)) Fail(name, line, "bad color");
    rows.push_back({ToVertex(toks[0], name, line, -1), static_cast<int>(col)});
  }
  std::vector<int> colors(rows.size(), -1);
  for (const auto& [v, col] : rows) {
    if (v >= static_cast<int>(rows.size()) || colors[v] >= 0) {
      Fail(name, line, "vertices must be 0..n-1, each once");
    }
    colors[v] = col;
  }
  return colors;
}

WeightedCCInstance ReadWeightedInstance(std::istream& in,
                                        const std::string& name,
                                        int num_vertices) {
  struct Row {
    int u, v, line;
    Rational w;
  };
  int line = 0;
  std::vector<std::string> toks;
  std::vector<Row> rows;
  int n = num_vertices;
  int max_id = -1;
  while (NextRecord(in, line, toks)) {
    if (toks.size() != 3) Fail(name, line, "line must be 'u v w_plus'");
    const int u = ToVertex(toks[0], name, line, num_vertices);
    const int v = ToVertex(toks[1], name, line, num_vertices);
    Rational w;
    try {
      w = Rational::Parse(toks[2]);
    } catch (const std::exception& e) {
      Fail(name, line, std::string("bad weight: ") + e.what());
    }
    rows.push_back({u, v, line, w});
    max_id = std::max({max_id, u, v});
  }
  if (n < 0) n = max_id + 1;
  WeightedCCInstance inst(n);
  std::set<std::pair<int, int>> seen;
  for (const Row& r : rows) {
    if (!seen.insert({std::min(r.u, r.v), std::max(r.u, r.v)}).second) {
      Fail(name, r.line, "pair listed twice");
    }
    try {
      inst.SetWPlus(r.u, r.v, r.w);
    } catch (const InputError& e) {
      Fail(name, r.line, e.what());
    }
  }
  return inst;
}

void WriteWeightedInstance(std::ostream& out, const WeightedCCInstance& inst) {
  for (Vertex u = 0; u < inst.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < inst.num_vertices(); ++v) {
      out << u << ' ' << v << ' ' << inst.w_plus(u, v).ToString() << '\n';
    }
  }
}

bool StreamReader::Next(StreamTriple& t) {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    hash_.Update(text);
    hash_.Update("\n");
    const std::vector<std::string> toks = Tokens(text);
    if (toks.empty()) continue;
    if (toks.size() != 4) Fail(name_, line_, "record must be 'u v j b'");
    long long f[4];
    for (int i = 0; i < 4; ++i) f[i] = ToInt(toks[i], name_, line_);
    for (long long x : f) {
      if (x < 0 || x > (1 << 30)) Fail(name_, line_, "field out of range");
    }
    if (f[3] > 1) Fail(name_, line_, "b must be 0 or 1");
    if (f[0] == f[1]) Fail(name_, line_, "u equals v");
    t = {static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]),
         static_cast<int>(f[2]), static_cast<int>(f[3])};
    return true;
  }
  return false;
}

void WriteStream(std::ostream& out, const std::vector<StreamTriple>& stream) {
  for (const StreamTriple& t : stream) {
    out << t.u << ' ' << t.v << ' ' << t.index << ' ' << t.bit << '\n';
  }
}

nlohmann::json PreserverToJson(const Preserver& h) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const VertexPair& p : h.pairs) pairs.push_back({p.s, p.t});
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : h.edges) edges.push_back({e.tail, e.head});
  return {{"n", h.num_vertices},
          {"k", h.fault_budget},
          {"pairs", pairs},
          {"edges", edges}};
}

Preserver PreserverFromJson(const nlohmann::json& j, const std::string& name) {
  const auto bad = [&](const std::string& msg) -> InputError {
    return InputError(name + ": " + msg);
  };
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs") ||
      !j.contains("edges")) {
    throw bad("expected an object with n, pairs and edges");
  }
  const auto as_pair = [&](const nlohmann::json& x) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number_integer() ||
        !x[1].is_number_integer()) {
      throw bad("expected [int, int], got " + x.dump());
    }
    return std::pair<int, int>(x[0].get<int>(), x[1].get<int>());
  };
  Preserver h;
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 0) {
    throw bad("n must be a non-negative integer");
  }
  h.num_vertices = j["n"].get<int>();
  if (j.contains("k")) h.fault_budget = j["k"].get<int>();
  std::vector<VertexPair> pairs;
  for (const auto& x : j["pairs"]) {
    const auto [s, t] = as_pair(x);
    pairs.push_back({s, t});
  }
  h.pairs = VertexPairSet(std::move(pairs));
  for (const auto& x : j["edges"]) {
    const auto [u, v] = as_pair(x);
    if (u < 0 || v < 0 || u >= h.num_vertices || v >= h.num_vertices) {
      throw bad("edge endpoint out of range");
    }
    h.edges.push_back({u, v});
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

}  // namespace robustfair::io
