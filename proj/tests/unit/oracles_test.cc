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

#include "robustfair/oracles.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "robustfair/clustering.h"
#include "robustfair/errors.h"
#include "robustfair/generators.h"
#include "robustfair/graph.h"
#include "robustfair/rational.h"

namespace robustfair::oracle {
namespace {

TEST(BellTest, KnownValues) {
  const std::vector<std::uint64_t> bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140,
                                           21147, 115975, 678570, 4213597};
  for (int n = 0; n < static_cast<int>(bell.size()); ++n) {
    EXPECT_EQ(BellNumber(n), bell[n]) << n;
  }
}

TEST(PartitionTest, EnumeratesEachPartitionOnce) {
  for (int n = 1; n <= 7; ++n) {
    std::set<Clustering> seen;
    std::vector<int> previous;
    const std::uint64_t count =
        ForEachPartition(n, [&](const std::vector<int>& labels) {
          EXPECT_TRUE(previous.empty() || previous < labels);
          previous = labels;
          seen.insert(Clustering(labels));
        });
    EXPECT_EQ(count, BellNumber(n));
    EXPECT_EQ(seen.size(), BellNumber(n));
  }
}

TEST(PartitionTest, CapIsEnforced) {
  const auto noop = [](const std::vector<int>&) {};
  EXPECT_THROW(ForEachPartition(11, noop), InputError);
  EXPECT_THROW(ForEachPartition(13, noop, 13), InputError);
  EXPECT_EQ(ForEachPartition(0, noop), 1u);
}

TEST(PartitionTest, PairDistMatchesLibrary) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Clustering a = gen::RandomClustering(8, seed);
    const Clustering b = gen::RandomClustering(8, seed + 1, 3);
    EXPECT_EQ(PairDist(a, b), Dist(a, b));
  }
}

TEST(FairnessOracleTest, ClusterChecks) {
  const std::vector<std::int64_t> ratio = {2, 1};
  EXPECT_TRUE(ClusterIsFair(std::vector<int>{4, 2}, ratio));
  EXPECT_FALSE(ClusterIsFair(std::vector<int>{2, 2}, ratio));
  const ColorProfile p({0, 0, 1});
  EXPECT_TRUE(PartitionIsFair(std::vector<int>{0, 0, 0}, p));
  EXPECT_FALSE(PartitionIsFair(std::vector<int>{0, 0, 1}, p));
  EXPECT_TRUE(PartitionIsPDivisible(std::vector<int>{0, 0, 1}, p));
  EXPECT_FALSE(PartitionIsPDivisible(std::vector<int>{0, 1, 1}, p));
}

TEST(VerifyFtrsTest, GraphPreservesItself) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DirectedGraph g = gen::RandomDigraph(6, 0.4, seed);
    const auto pairs = gen::RandomPairs(6, 5, seed);
    const FtrsVerdict v = VerifyFtrs(g, g.edges(), pairs);
    EXPECT_TRUE(v.passed);
    EXPECT_FALSE(v.sampled);
  }
}

TEST(VerifyFtrsTest, MissingOnlyEdgeFailsWithoutFaults) {
  const DirectedGraph g(2, {{0, 1}});
  const std::vector<VertexPair> pairs = {{0, 1}};
  const FtrsVerdict v = VerifyFtrs(g, {}, pairs);
  EXPECT_FALSE(v.passed);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_TRUE(v.counterexample->faults.empty());
  EXPECT_TRUE(v.counterexample->reachable_in_graph);
  EXPECT_EQ(v.fault_sets, 1u);
}

TEST(VerifyFtrsTest, SecondFaultNeeded) {
  // Diamond without one branch survives no fault on that branch.
  const DirectedGraph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  const std::vector<Edge> h = {{0, 1}, {1, 3}};
  const std::vector<VertexPair> pairs = {{0, 3}};
  const FtrsVerdict v = VerifyFtrs(g, h, pairs);
  EXPECT_FALSE(v.passed);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_EQ(v.counterexample->faults.size(), 1u);
  VerifyOptions none;
  none.k = 0;
  EXPECT_TRUE(VerifyFtrs(g, h, pairs, none).passed);
}

TEST(VerifyFtrsTest, ForeignEdgeIsRejected) {
  const DirectedGraph g(3, {{0, 1}});
  const std::vector<Edge> h = {{1, 2}};
  const std::vector<VertexPair> pairs = {{0, 1}};
  const FtrsVerdict v = VerifyFtrs(g, h, pairs);
  EXPECT_FALSE(v.passed);
  EXPECT_FALSE(v.reason.empty());
}

TEST(VerifyFtrsTest, SamplesAboveLimit) {
  const DirectedGraph g = gen::RandomDigraph(20, 0.5, 3);
  const auto pairs = gen::RandomPairs(20, 3, 4);
  VerifyOptions opts;
  opts.samples = 500;
  const FtrsVerdict v = VerifyFtrs(g, g.edges(), pairs, opts);
  EXPECT_TRUE(v.passed);
  EXPECT_TRUE(v.sampled);
}

TEST(ClosestFairOracleTest, Examples) {
  const ColorProfile p({0, 0, 1});
  const Clustering c = Clustering::FromClusters(3, {{0, 1}, {2}});
  const PartitionResult r = ClosestFair(c, p);
  EXPECT_EQ(r.dist, 2);
  EXPECT_EQ(r.clustering, Clustering::OneCluster(3));
  EXPECT_EQ(r.enumerated, 5u);
  const PartitionResult self = ClosestFair(Clustering::OneCluster(3), p);
  EXPECT_EQ(self.dist, 0);
}

TEST(ClosestFairOracleTest, PdcAndCache) {
  const ColorProfile p({0, 1, 0, 0, 1, 0});
  ClosestFairCache cache;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Clustering c = gen::RandomClustering(6, seed);
    const PartitionResult fair = ClosestFair(c, p);
    EXPECT_TRUE(IsFair(fair.clustering, p));
    EXPECT_EQ(cache.Get(c, p).dist, fair.dist);
    const PartitionResult pdc = ClosestPdc(c, p);
    EXPECT_TRUE(IsPDivisible(pdc.clustering, p));
    EXPECT_LE(pdc.dist, fair.dist);
  }
  EXPECT_LE(cache.size(), 30u);
}

TEST(ConsensusOracleTest, IdenticalAndSingleInputs) {
  const ColorProfile p({0, 1, 1, 0});
  const Clustering c = Clustering::FromClusters(4, {{0, 1}, {2, 3}});
  const std::vector<Clustering> same(3, c);
  const ConsensusResult r = FairConsensus(same, p, 2);
  EXPECT_EQ(r.clustering, c);
  EXPECT_EQ(r.objective, 0.0);
  const std::vector<Clustering> single = {Clustering::Singletons(4)};
  for (int ell : {1, 3}) {
    EXPECT_EQ(FairConsensus(single, p, ell).distances[0],
              ClosestFair(single[0], p).dist);
  }
}

TEST(ConsensusOracleTest, ObjectiveFromDistances) {
  const std::vector<std::int64_t> d = {3, 4};
  EXPECT_DOUBLE_EQ(ObjectiveFromDistances(d, 1), 7.0);
  EXPECT_DOUBLE_EQ(ObjectiveFromDistances(d, 2), 5.0);
}

TEST(CcOracleTest, TrivialInstances) {
  const CcResult plus = CcOpt(WeightedCCInstance(5, 1));
  EXPECT_EQ(plus.clustering, Clustering::OneCluster(5));
  EXPECT_EQ(plus.cost, Rational(0));
  const CcResult minus = CcOpt(WeightedCCInstance(5, 0));
  EXPECT_EQ(minus.clustering, Clustering::Singletons(5));
  EXPECT_EQ(minus.cost, Rational(0));
}

TEST(CcOracleTest, FairRestrictionAndCost) {
  const ColorProfile p({0, 0, 1, 0, 0, 1});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightedCCInstance inst = gen::RandomCcInstance(6, seed);
    const CcResult any = CcOpt(inst);
    const CcResult fair = CcOpt(inst, &p);
    EXPECT_TRUE(IsFair(fair.clustering, p));
    EXPECT_LE(any.cost, fair.cost);
    EXPECT_EQ(CcCost(inst, fair.clustering), fair.cost);
    EXPECT_EQ(AssignmentCost(inst, any.clustering.assignment()), any.cost);
  }
}

}  // namespace
}  // namespace robustfair::oracle

namespace robustfair::gen {
namespace {

TEST(GeneratorsTest, SeedStability) {
  EXPECT_EQ(RandomDigraph(10, 0.3, 7), RandomDigraph(10, 0.3, 7));
  EXPECT_EQ(RandomPairs(10, 5, 7), RandomPairs(10, 5, 7));
  EXPECT_EQ(RandomClustering(10, 7), RandomClustering(10, 7));
  const std::vector<std::int64_t> ratio = {3, 2};
  EXPECT_EQ(RandomColors(10, ratio, 7), RandomColors(10, ratio, 7));
  EXPECT_NE(RandomClustering(30, 7), RandomClustering(30, 8));
}

TEST(GeneratorsTest, ProfileConformance) {
  const std::vector<std::int64_t> ratio = {5, 3, 2};
  const std::vector<int> colors = RandomColors(20, ratio, 1);
  std::vector<int> count(3, 0);
  for (int c : colors) ++count[c];
  EXPECT_EQ(count, (std::vector<int>{10, 6, 4}));
  EXPECT_THROW(RandomColors(11, ratio, 1), InputError);
}

TEST(GeneratorsTest, PairsAreDistinctAndProper) {
  const auto pairs = RandomPairs(4, 100, 3);
  EXPECT_EQ(pairs.size(), 12u);
  EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
  for (const VertexPair& p : pairs) EXPECT_NE(p.s, p.t);
}

TEST(GeneratorsTest, StreamCompleteness) {
  std::vector<Clustering> inputs;
  for (int i = 0; i < 4; ++i) inputs.push_back(RandomClustering(7, i));
  const auto stream = RandomStream(inputs, 5);
  EXPECT_EQ(stream.size(), 7u * 6 / 2 * 4);
  std::set<std::tuple<int, int, int>> keys;
  for (const StreamTriple& t : stream) {
    keys.insert({t.index, std::min(t.u, t.v), std::max(t.u, t.v)});
    EXPECT_EQ(t.bit, inputs[t.index].Together(t.u, t.v) ? 0 : 1);
  }
  EXPECT_EQ(keys.size(), stream.size());
}

TEST(GeneratorsTest, CcInstanceWeightsOnGrid) {
  const WeightedCCInstance inst = RandomCcInstance(6, 2, 4);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      const Rational w = inst.w_plus(u, v);
      EXPECT_GE(w, Rational(0));
      EXPECT_LE(w, Rational(1));
      EXPECT_EQ(4 % w.den(), 0);
    }
  }
}

}  // namespace
}  // namespace robustfair::gen
