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

#include "robustfair/ftrs.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "robustfair/errors.h"
#include "robustfair/generators.h"
#include "robustfair/graph.h"
#include "robustfair/oracles.h"

namespace robustfair {
namespace {

DirectedGraph Diamond() {
  return DirectedGraph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
}

void ExpectPreserves(const DirectedGraph& g, const Preserver& h,
                     std::span<const VertexPair> pairs) {
  oracle::VerifyOptions opts;
  opts.force_exhaustive = true;
  const oracle::FtrsVerdict v = oracle::VerifyFtrs(g, h.edges, pairs, opts);
  EXPECT_TRUE(v.passed) << v.reason;
  EXPECT_FALSE(v.sampled);
  for (const Edge& e : h.edges) EXPECT_TRUE(g.HasEdge(e.tail, e.head));
}

TEST(SinglePairTest, DiamondKeepsEverything) {
  const Preserver h = BuildSinglePair2Ftrs(Diamond(), 0, 3);
  EXPECT_EQ(h.size(), 4u);
  const std::vector<VertexPair> pairs = {{0, 3}};
  ExpectPreserves(Diamond(), h, pairs);
}

TEST(SinglePairTest, PathKeepsBothEdges) {
  const DirectedGraph g(3, {{0, 1}, {1, 2}});
  const Preserver h = BuildSinglePair2Ftrs(g, 0, 2);
  EXPECT_EQ(h.edges, g.edges());
  const std::vector<Edge> faults = {{0, 1}};
  EXPECT_FALSE(Reachable(g, 0, 2, faults));
  EXPECT_FALSE(Reachable(h.ToGraph(), 0, 2, faults));
}

TEST(SinglePairTest, UnreachableTargetIsEmpty) {
  const DirectedGraph g(3, {{0, 1}});
  EXPECT_EQ(BuildSinglePair2Ftrs(g, 0, 2).size(), 0u);
  EXPECT_TRUE(AnalyzeSinglePair(g, 0, 2).trivial());
}

TEST(SinglePairTest, DropsUselessEdges) {
  // 4 -> 5 plays no part in any 0 -> 3 path.
  const DirectedGraph g(6, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {4, 5}});
  EXPECT_EQ(BuildSinglePair2Ftrs(g, 0, 3).size(), 4u);
}

// Every labeled digraph on four vertices, every pair, plus random graphs on
// five and six vertices: dual-fault soundness and in-degree at most 4 for
// vertices off both strands.
void CheckSinglePair(const DirectedGraph& g) {
  const int n = g.num_vertices();
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t) continue;
      const SinglePairStructure st = AnalyzeSinglePair(g, s, t);
      const Preserver h = BuildSinglePair2Ftrs(g, s, t);
      const std::vector<VertexPair> pairs = {{s, t}};
      ExpectPreserves(g, h, pairs);
      if (st.trivial()) continue;
      std::vector<bool> on(n, false);
      for (int i = 0; i < 2; ++i) {
        for (Vertex v : st.strands->strand(i).vertices) on[v] = true;
      }
      std::vector<int> indeg(n, 0);
      for (const Edge& e : h.edges) ++indeg[e.head];
      for (Vertex v = 0; v < n; ++v) {
        if (!on[v]) {
          EXPECT_LE(indeg[v], 4);
        }
      }
    }
  }
}

TEST(SinglePairTest, AllFourVertexDigraphs) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      if (u != v) all.push_back({u, v});
    }
  }
  for (unsigned mask = 0; mask < (1u << all.size()); mask += 7) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) edges.push_back(all[i]);
    }
    CheckSinglePair(DirectedGraph(4, edges));
  }
}

TEST(SinglePairTest, RandomSixVertexDigraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    CheckSinglePair(gen::RandomDigraph(5 + seed % 2, 0.4, seed));
  }
}

TEST(HittingSetTest, SharedElement) {
  const SubsetFamily f{4, 2, {{1, 2}, {2, 3}}};
  EXPECT_EQ(FractionalHittingSet(f), (std::vector<Vertex>{2}));
}

TEST(HittingSetTest, SingleForcedElement) {
  const SubsetFamily f{1, 1, {{0}}};
  EXPECT_EQ(FractionalHittingSet(f), (std::vector<Vertex>{0}));
}

TEST(HittingSetTest, EmptyFamily) {
  EXPECT_TRUE(FractionalHittingSet(SubsetFamily{5, 2, {}}).empty());
}

TEST(HittingSetTest, RejectsBadSubsets) {
  EXPECT_THROW(FractionalHittingSet(SubsetFamily{4, 2, {{1}}}), InputError);
  EXPECT_THROW(FractionalHittingSet(SubsetFamily{4, 1, {{4}}}), InputError);
}

TEST(HittingSetTest, RandomFamiliesMeetBounds) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    const int m = std::uniform_int_distribution<int>(1, 60)(rng);
    SubsetFamily f{n, k, {}};
    std::vector<Vertex> universe(n);
    for (Vertex v = 0; v < n; ++v) universe[v] = v;
    for (int i = 0; i < m; ++i) {
      std::shuffle(universe.begin(), universe.end(), rng);
      const int size = std::uniform_int_distribution<int>(k, n)(rng);
      f.subsets.emplace_back(universe.begin(), universe.begin() + size);
    }
    const std::vector<Vertex> hit = FractionalHittingSet(f);
    EXPECT_LE(static_cast<int>(hit.size()), (4 * n + k - 1) / k);
    int covered = 0;
    for (const auto& s : f.subsets) {
      covered += std::any_of(s.begin(), s.end(), [&](Vertex v) {
        return std::binary_search(hit.begin(), hit.end(), v);
      });
    }
    EXPECT_GE(10 * covered, 9 * m);
  }
}

TEST(PathPrefixLengthTest, SmallestCubeCover) {
  EXPECT_EQ(PathPrefixLength(8, 1), 4);
  EXPECT_EQ(PathPrefixLength(8, 64), 1);
  EXPECT_EQ(PathPrefixLength(1, 5), 1);
  for (int n = 1; n < 40; ++n) {
    for (std::size_t p = 1; p < 50; ++p) {
      const long long l = PathPrefixLength(n, p);
      EXPECT_GE(l * l * l * static_cast<long long>(p), 1LL * n * n);
      if (l > 1) {
        EXPECT_LT((l - 1) * (l - 1) * (l - 1) * static_cast<long long>(p),
                  1LL * n * n);
      }
    }
  }
}

TEST(SlackTest, SinglePairIsCovered) {
  const VertexPairSet pairs({{0, 3}});
  const SlackResult r = BuildPairwise2FtrsSlack(Diamond(), pairs);
  EXPECT_EQ(r.covered, pairs);
  ExpectPreserves(Diamond(), r.preserver, r.covered.pairs());
}

TEST(SlackTest, EdgelessGraph) {
  const DirectedGraph g(5, {});
  const VertexPairSet pairs({{0, 1}, {2, 3}, {4, 0}});
  const SlackResult r = BuildPairwise2FtrsSlack(g, pairs);
  EXPECT_EQ(r.preserver.size(), 0u);
  EXPECT_EQ(r.covered, pairs);
}

TEST(SlackTest, EmptyPairSetThrows) {
  EXPECT_THROW(BuildPairwise2FtrsSlack(Diamond(), VertexPairSet()),
               InputError);
}

TEST(SlackTest, RandomGraphsCoverAndPreserve) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 5 + seed % 4;
    const DirectedGraph g = gen::RandomDigraph(n, 0.35, seed);
    const VertexPairSet pairs(gen::RandomPairs(n, 1 + seed % 4, seed + 1));
    const SlackResult r = BuildPairwise2FtrsSlack(g, pairs);
    EXPECT_GE(5 * r.covered.size(), 3 * pairs.size());
    for (const VertexPair& p : r.covered) EXPECT_TRUE(pairs.contains(p));
    ExpectPreserves(g, r.preserver, r.covered.pairs());
  }
}

TEST(SlackTest, LargerInstanceSampled) {
  const DirectedGraph g = gen::RandomDigraph(30, 0.12, 99);
  const VertexPairSet pairs(gen::RandomPairs(30, 25, 100));
  const SlackResult r = BuildPairwise2FtrsSlack(g, pairs);
  EXPECT_GE(5 * r.covered.size(), 3 * pairs.size());
  oracle::VerifyOptions opts;
  opts.exhaustive_limit = 0;
  opts.samples = 10000;
  const auto v = oracle::VerifyFtrs(g, r.preserver.edges, r.covered.pairs(),
                                    opts);
  EXPECT_TRUE(v.passed);
  EXPECT_TRUE(v.sampled);
}

TEST(FullTest, EmptyPairSet) {
  EXPECT_EQ(BuildPairwise2Ftrs(Diamond(), VertexPairSet()).size(), 0u);
}

TEST(FullTest, FiveCycle) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 5; ++v) edges.push_back({v, (v + 1) % 5});
  const DirectedGraph g(5, edges);
  const Preserver h = BuildPairwise2Ftrs(g, VertexPairSet({{0, 3}}));
  // Only 0 -> 1 -> 2 -> 3 matters; any fault on it cuts both graphs.
  EXPECT_EQ(h.edges, (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  const std::vector<VertexPair> pairs = {{0, 3}};
  ExpectPreserves(g, h, pairs);
}

TEST(FullTest, RandomGraphsAllPairs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 5 + seed % 3;
    const DirectedGraph g = gen::RandomDigraph(n, 0.3, seed + 500);
    const VertexPairSet pairs(gen::RandomPairs(n, 3 + seed % 6, seed));
    const Preserver h = BuildPairwise2Ftrs(g, pairs);
    EXPECT_EQ(h.pairs, pairs);
    ExpectPreserves(g, h, pairs.pairs());
  }
}

TEST(FullTest, ThreadCountDoesNotChangeOutput) {
  const DirectedGraph g = gen::RandomDigraph(20, 0.15, 4);
  const VertexPairSet pairs(gen::RandomPairs(20, 12, 5));
  FtrsBuilder one(g, {}, 1);
  FtrsBuilder four(g, {}, 4);
  EXPECT_EQ(one.Full(pairs).edges, four.Full(pairs).edges);
}

TEST(UnionTest, MergesEdgesAndPairs) {
  const Preserver a = BuildSinglePair2Ftrs(Diamond(), 0, 1);
  const Preserver b = BuildSinglePair2Ftrs(Diamond(), 0, 2);
  const Preserver u = Union(a, b);
  EXPECT_EQ(u.edges, (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(u.pairs, VertexPairSet({{0, 1}, {0, 2}}));
}

TEST(SingleSourceTest, StarKeepsAllEdges) {
  const DirectedGraph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(SingleSource2Ftrs(g, 0, Direction::kSource).edges, g.edges());
}

TEST(SingleSourceTest, EmptyGraph) {
  const DirectedGraph g(4, {});
  EXPECT_EQ(SingleSource2Ftrs(g, 0, Direction::kSource).size(), 0u);
  EXPECT_EQ(SingleSource2Ftrs(g, 2, Direction::kDestination).size(), 0u);
}

TEST(SingleSourceTest, RandomGraphsBothDirections) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 4 + seed % 3;
    const DirectedGraph g = gen::RandomDigraph(n, 0.4, seed + 77);
    for (Vertex s = 0; s < n; ++s) {
      std::vector<VertexPair> out, in;
      for (Vertex v = 0; v < n; ++v) {
        if (v == s) continue;
        out.push_back({s, v});
        in.push_back({v, s});
      }
      ExpectPreserves(g, SingleSource2Ftrs(g, s, Direction::kSource), out);
      ExpectPreserves(g, SingleSource2Ftrs(g, s, Direction::kDestination),
                      in);
    }
  }
}

}  // namespace
}  // namespace robustfair
