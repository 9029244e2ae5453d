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

#include "robustfair/fair_two_color.h"

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "robustfair/clustering.h"
#include "robustfair/errors.h"
#include "robustfair/generators.h"
#include "robustfair/oracles.h"

namespace robustfair {
namespace {

constexpr int kB = 0;
constexpr int kR = 1;

TEST(TwoColorRolesTest, FindsTheHeavySide) {
  const TwoColorRoles roles = TwoColorRolesOf(ColorProfile({kR, kB, kB}));
  EXPECT_EQ(roles.blue, kB);
  EXPECT_EQ(roles.p, 2);
  const TwoColorRoles flipped = TwoColorRolesOf(ColorProfile({kR, kR, kB}));
  EXPECT_EQ(flipped.blue, kR);
  EXPECT_EQ(flipped.red, kB);
  EXPECT_THROW(TwoColorRolesOf(ColorProfile({0, 1, 2})), InputError);
  EXPECT_THROW(TwoColorRolesOf(ColorProfile({0, 0, 0, 1, 1})), InputError);
}

TEST(CreatePdcTest, DivisibleInputUnchanged) {
  const ColorProfile p({kB, kB, kR, kB, kB, kR});
  const Clustering c = Clustering::FromClusters(6, {{0, 1}, {2}, {3, 4, 5}});
  EXPECT_EQ(CreatePdcTwoColor(c, p), c);
}

TEST(CreatePdcTest, TwoOddClusters) {
  const ColorProfile p({kB, kB, kB, kR, kB, kR});
  const Clustering c = Clustering::FromClusters(6, {{0, 1, 2, 3}, {4, 5}});
  const Clustering t = CreatePdcTwoColor(c, p);
  EXPECT_TRUE(IsPDivisible(t, p));
  // Any fix moves one blue across: three pairs lost, two gained at best.
  const auto opt = oracle::ClosestPdc(c, p);
  ASSERT_EQ(opt.dist, 5);
  EXPECT_LE(2 * Dist(c, t), 7 * opt.dist);
}

TEST(CreatePdcTest, MergeCaseTraceAgrees) {
  // Three clusters with two blues short each cannot be fixed by cuts alone.
  const std::vector<int> colors = {kB, kB, kB, kB, kB, kB, kB, kB, kB,
                                   kR, kR, kR};
  const ColorProfile p(colors);
  ASSERT_EQ(p.ratio(kB), 3);
  const Clustering c = Clustering::FromClusters(
      12, {{0, 9}, {1, 10}, {2, 11}, {3, 4, 5, 6, 7, 8}});
  DivisibilityTrace trace;
  const Clustering t = CreatePdcTwoColor(c, p, &trace);
  EXPECT_TRUE(IsPDivisible(t, p));
  if (trace.merge_case) {
    EXPECT_EQ(trace.subsets_cut, trace.expected_subsets);
  }
}

TEST(CreatePdcTest, SweepAgainstOracle) {
  const ColorProfile p({kB, kR, kB, kB, kR, kB});
  oracle::ForEachPartition(6, [&](const std::vector<int>& labels) {
    const Clustering c(labels);
    const Clustering t = CreatePdcTwoColor(c, p);
    ASSERT_TRUE(IsPDivisible(t, p)) << c.ToString();
    const auto opt = oracle::ClosestPdc(c, p);
    EXPECT_LE(2 * Dist(c, t), 7 * opt.dist) << c.ToString();
  });
}

TEST(MakeClustersFairTest, PairsBlueWithRed) {
  const ColorProfile p({kB, kB, kR});
  const Clustering t = Clustering::FromClusters(3, {{0, 1}, {2}});
  const Clustering f = MakeClustersFair(t, p);
  EXPECT_EQ(f, Clustering::OneCluster(3));
  EXPECT_EQ(Dist(t, f), 2);
  EXPECT_EQ(oracle::ClosestFair(t, p).dist, 2);
}

TEST(MakeClustersFairTest, FairInputUnchanged) {
  const ColorProfile p({kB, kB, kR, kR, kB, kB});
  const Clustering f = Clustering::FromClusters(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(MakeClustersFair(f, p), f);
}

TEST(MakeClustersFairTest, Preconditions) {
  const ColorProfile p({kB, kB, kR});
  const Clustering odd = Clustering::FromClusters(3, {{0}, {1, 2}});
  EXPECT_THROW(MakeClustersFair(odd, p), PreconditionError);
  const ColorProfile equal({kB, kR});
  EXPECT_THROW(MakeClustersFair(Clustering::Singletons(2), equal),
               PreconditionError);
}

TEST(MakeClustersFairTest, SweepAgainstOracle) {
  const ColorProfile p({kB, kB, kR, kB, kR, kB});
  oracle::ForEachPartition(6, [&](const std::vector<int>& labels) {
    const Clustering t(labels);
    if (!IsPDivisible(t, p)) return;
    const Clustering f = MakeClustersFair(t, p);
    ASSERT_TRUE(IsFair(f, p));
    EXPECT_LE(Dist(t, f), 3 * oracle::ClosestFair(t, p).dist);
  });
}

TEST(ClosestFairTwoColorTest, FairInputIsFixed) {
  const ColorProfile p({kB, kB, kR, kR, kB, kB});
  const Clustering f = Clustering::FromClusters(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(ClosestFairTwoColor(f, p), f);
}

TEST(ClosestFairTwoColorTest, SmallExample) {
  const ColorProfile p({kB, kB, kR});
  const Clustering c = Clustering::FromClusters(3, {{0, 1}, {2}});
  const Clustering f = ClosestFairTwoColor(c, p);
  EXPECT_TRUE(IsFair(f, p));
  EXPECT_LE(Dist(c, f), 17 * 2);
}

TEST(ClosestFairTwoColorTest, StagesCompose) {
  const ColorProfile p(gen::RandomColors(9, std::vector<std::int64_t>{2, 1},
                                         3));
  const Clustering c = gen::RandomClustering(9, 8, 4);
  const TwoColorStages s = ClosestFairTwoColorStages(c, p);
  EXPECT_TRUE(IsPDivisible(s.pdc, p));
  EXPECT_TRUE(IsFair(s.fair, p));
  EXPECT_EQ(s.fair, ClosestFairTwoColor(c, p));
}

TEST(ClosestFairTwoColorTest, RatioFourSweep) {
  const ColorProfile p({kB, kB, kR, kB, kB});
  ASSERT_EQ(p.ratio(kB), 4);
  oracle::ForEachPartition(5, [&](const std::vector<int>& labels) {
    const Clustering c(labels);
    const Clustering f = ClosestFairTwoColor(c, p);
    ASSERT_TRUE(IsFair(f, p));
    EXPECT_LE(Dist(c, f), 17 * oracle::ClosestFair(c, p).dist);
  });
}

TEST(ClosestFairTwoColorTest, RatioThreeSampled) {
  const ColorProfile p(gen::RandomColors(8, std::vector<std::int64_t>{3, 1},
                                         1));
  oracle::ClosestFairCache cache;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Clustering c = gen::RandomClustering(8, seed, 1 + seed % 5);
    const Clustering f = ClosestFairTwoColor(c, p);
    ASSERT_TRUE(IsFair(f, p));
    EXPECT_LE(Dist(c, f), 17 * cache.Get(c, p).dist);
  }
}

TEST(ThreePartitionTest, TauForSmallInstance) {
  const std::vector<int> items = {5, 6, 7};
  const ThreePartitionInstance inst = GenNpHardInstance(items, 2);
  EXPECT_EQ(inst.target, 18);
  EXPECT_EQ(inst.tau, 755);
  EXPECT_EQ(inst.split_tau, 648);
  EXPECT_EQ(inst.clustering.num_vertices(), 2 * 18 + 18);
  EXPECT_EQ(inst.BlueCluster(0).size(), 36u);
  EXPECT_EQ(inst.RedCluster(2).size(), 7u);
  EXPECT_FALSE(IsFair(inst.clustering, inst.profile));
}

TEST(ThreePartitionTest, WitnessesReachTau) {
  const std::vector<int> items = {5, 7, 6, 6, 5, 7};
  const ThreePartitionInstance inst = GenNpHardInstance(items, 3);
  const auto triples = SolveThreePartition(items);
  ASSERT_TRUE(triples.has_value());
  for (const Triple& t : *triples) {
    EXPECT_EQ(items[t[0]] + items[t[1]] + items[t[2]], inst.target);
  }
  const Clustering w = ThreePartitionWitness(inst, *triples);
  EXPECT_TRUE(IsFair(w, inst.profile));
  EXPECT_EQ(Dist(inst.clustering, w), inst.tau);
  const Clustering split = ThreePartitionSplitWitness(inst, *triples);
  EXPECT_TRUE(IsFair(split, inst.profile));
  EXPECT_EQ(Dist(inst.clustering, split), inst.split_tau);
}

TEST(ThreePartitionTest, NoInstanceHasNoSolution) {
  const std::vector<int> items = {5, 5, 5, 7, 7, 7};
  EXPECT_FALSE(SolveThreePartition(items).has_value());
}

TEST(ThreePartitionTest, RejectsInvalidItems) {
  const std::vector<int> big = {2, 2, 10};  // 10 >= T/2
  EXPECT_THROW(GenNpHardInstance(big, 2), InputError);
  const std::vector<int> two = {5, 6};
  EXPECT_THROW(GenNpHardInstance(two, 2), InputError);
  const std::vector<int> frac = {5, 6, 7, 5, 6, 8};  // T = 18.5
  EXPECT_THROW(GenNpHardInstance(frac, 2), InputError);
  const std::vector<int> ok = {5, 6, 7};
  EXPECT_THROW(GenNpHardInstance(ok, 1), InputError);
}

}  // namespace
}  // namespace robustfair
