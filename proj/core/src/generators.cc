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

#include "robustfair/generators.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "robustfair/errors.h"

namespace robustfair::gen {

DirectedGraph RandomDigraph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("negative vertex count");
  if (!(p >= 0 && p <= 1)) throw InputError("edge probability outside [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v});
    }
  }
  return DirectedGraph(n, std::move(edges));
}

std::vector<VertexPair> RandomPairs(int n, int count, std::uint64_t seed) {
  std::vector<VertexPair> all;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s != t) all.push_back({s, t});
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(all.size(), std::max(count, 0)));
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<int> RandomColors(int n, std::span<const std::int64_t> ratio,
                              std::uint64_t seed) {
  const std::int64_t total =
      std::accumulate(ratio.begin(), ratio.end(), std::int64_t{0});
  if (ratio.empty() || total <= 0 || n % total != 0) {
    throw InputError("ratio sum must divide the vertex count");
  }
  std::vector<int> colors;
  for (std::size_t c = 0; c < ratio.size(); ++c) {
    if (ratio[c] < 1) throw InputError("ratio entries must be positive");
    colors.insert(colors.end(), n / total * ratio[c], static_cast<int>(c));
  }
  std::mt19937_64 rng(seed);
  std::shuffle(colors.begin(), colors.end(), rng);
  return colors;
}

Clustering RandomClustering(int n, std::uint64_t seed, int max_clusters) {
  if (n < 0) throw InputError("negative vertex count");
  if (max_clusters <= 0) max_clusters = std::max(n, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> label(0, max_clusters - 1);
  std::vector<int> assignment(n);
  for (int& a : assignment) a = label(rng);
  return Clustering(assignment);
}

std::vector<StreamTriple> RandomStream(std::span<const Clustering> inputs,
                                       std::uint64_t seed) {
  std::vector<StreamTriple> out;
  for (int j = 0; j < static_cast<int>(inputs.size()); ++j) {
    const Clustering& c = inputs[j];
    for (Vertex u = 0; u < c.num_vertices(); ++u) {
      for (Vertex v = u + 1; v < c.num_vertices(); ++v) {
        out.push_back({u, v, j, c.Together(u, v) ? 0 : 1});
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(out.begin(), out.end(), rng);
  // random orientation too; records are unordered pairs
  std::bernoulli_distribution flip(0.5);
  for (StreamTriple& t : out) {
    if (flip(rng)) std::swap(t.u, t.v);
  }
  return out;
}

WeightedCCInstance RandomCcInstance(int n, std::uint64_t seed, int den) {
  if (den < 1) throw InputError("denominator must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, den);
  WeightedCCInstance inst(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      inst.SetWPlus(u, v, Rational(num(rng), den));
    }
  }
  return inst;
}

}  // namespace robustfair::gen
