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

#include "robustfair/reductions.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "robustfair/clustering.h"
#include "robustfair/errors.h"
#include "robustfair/fair_multicolor.h"
#include "robustfair/generators.h"
#include "robustfair/oracles.h"
#include "robustfair/rational.h"

namespace robustfair {
namespace {

Clustering Fair(const Clustering& c, const ColorProfile& p) {
  return ClosestFair(c, p);
}

TEST(PivotTest, AllPositiveIsOneCluster) {
  const WeightedCCInstance inst(6, 1);
  const Clustering c = PivotCc(inst, 3);
  EXPECT_EQ(c, Clustering::OneCluster(6));
  EXPECT_EQ(CcCost(inst, c), Rational(0));
}

TEST(PivotTest, AllNegativeIsSingletons) {
  const WeightedCCInstance inst(6, 0);
  EXPECT_EQ(PivotCc(inst, 3), Clustering::Singletons(6));
}

TEST(PivotTest, RecoversClusterGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Clustering c = gen::RandomClustering(9, seed, 4);
    EXPECT_EQ(PivotCc(WeightedCCInstance::FromClustering(c), seed), c);
  }
}

TEST(PivotTest, DeterministicPerSeed) {
  const WeightedCCInstance inst = gen::RandomCcInstance(10, 5);
  EXPECT_EQ(PivotCc(inst, 1), PivotCc(inst, 1));
}

TEST(PivotTest, HalfWeightJoinsPivot) {
  WeightedCCInstance inst(2, 0);
  inst.SetWPlus(0, 1, Rational(1, 2));
  EXPECT_EQ(PivotCc(inst, 0), Clustering::OneCluster(2));
}

TEST(FairfyTest, FairOptimumIsKept) {
  const ColorProfile p({0, 0, 1, 0, 0, 1});
  const Clustering c = Clustering::FromClusters(6, {{0, 1, 2}, {3, 4, 5}});
  const WeightedCCInstance inst = WeightedCCInstance::FromClustering(c);
  const Clustering f = FairfyCc(inst, p, DefaultSolverHandle(7));
  EXPECT_EQ(f, c);
  EXPECT_EQ(CcCost(inst, f), oracle::CcOpt(inst).cost);
}

TEST(FairfyTest, ConstantHalfWeights) {
  const ColorProfile p({0, 1, 0, 0, 1, 0, 0, 0, 1});
  const WeightedCCInstance inst(9, Rational(1, 2));
  const Clustering f = FairfyCc(inst, p, DefaultSolverHandle(2));
  EXPECT_TRUE(IsFair(f, p));
  EXPECT_EQ(CcCost(inst, f), Rational(9 * 8, 4));
}

TEST(FairfyTest, StagesAreConsistent) {
  const ColorProfile p({0, 0, 1, 0, 0, 1});
  const WeightedCCInstance inst = gen::RandomCcInstance(6, 4);
  const SolverHandle handle = DefaultSolverHandle(4);
  const FairfyResult r = FairfyCcStages(inst, p, handle);
  EXPECT_EQ(r.unfair, PivotCc(inst, 4));
  EXPECT_EQ(r.fair, Fair(r.unfair, p));
  EXPECT_EQ(DefaultFairCcSolver(4)(inst, p), r.fair);
}

// cost(F) <= (alpha + rho + alpha rho) fairOPT with rho observed per instance.
TEST(FairfyTest, UnweightedBoundAgainstOracle) {
  const ColorProfile p({0, 0, 1, 0, 0, 1});
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const WeightedCCInstance inst = gen::RandomCcInstance(6, seed, 1);
    const SolverHandle handle = DefaultSolverHandle(seed);
    const FairfyResult r = FairfyCcStages(inst, p, handle);
    ASSERT_TRUE(IsFair(r.fair, p));
    const Rational opt = oracle::CcOpt(inst).cost;
    const Rational fair_opt = oracle::CcOpt(inst, &p).cost;
    const Rational cost_d = CcCost(inst, r.unfair);
    const Rational cost_f = CcCost(inst, r.fair);
    const Rational alpha(static_cast<std::int64_t>(handle.alpha));
    if (opt == 0) {
      EXPECT_EQ(cost_d, Rational(0));
      EXPECT_LE(cost_f, alpha * fair_opt);
      continue;
    }
    const Rational rho = cost_d / opt;
    EXPECT_LE(cost_f, (alpha + rho + alpha * rho) * fair_opt);
  }
}

TEST(ConsensusOfflineTest, IdenticalFairInputs) {
  const ColorProfile p({0, 1, 1, 0});
  const Clustering c = Clustering::FromClusters(4, {{0, 1}, {2, 3}});
  const std::vector<Clustering> inputs(3, c);
  const ConsensusResult r = FairConsensusOffline(inputs, p, 1, Fair);
  EXPECT_EQ(r.clustering, c);
  EXPECT_EQ(r.chosen, 0);
  EXPECT_EQ(r.objective, 0.0);
}

TEST(ConsensusOfflineTest, SingleInput) {
  const ColorProfile p({0, 0, 1, 0, 0, 1});
  const std::vector<Clustering> inputs = {gen::RandomClustering(6, 3)};
  const ConsensusResult r = FairConsensusOffline(inputs, p, 2, Fair);
  EXPECT_EQ(r.clustering, Fair(inputs[0], p));
  ASSERT_EQ(r.candidates.size(), 1u);
}

TEST(ConsensusOfflineTest, Errors) {
  const ColorProfile p({0, 1});
  EXPECT_THROW(FairConsensusOffline({}, p, 1, Fair), InputError);
  const std::vector<Clustering> mixed = {Clustering::Singletons(2),
                                         Clustering::Singletons(3)};
  EXPECT_THROW(FairConsensusOffline(mixed, p, 1, Fair), InputError);
}

TEST(ConsensusOfflineTest, ThreadsAndOrderDoNotMatter) {
  const ColorProfile p({0, 0, 1, 0, 0, 1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<Clustering> inputs;
    for (int i = 0; i < 4; ++i) {
      inputs.push_back(gen::RandomClustering(6, seed * 10 + i, 3));
    }
    const ConsensusResult one = FairConsensusOffline(inputs, p, 2, Fair, 1);
    const ConsensusResult four = FairConsensusOffline(inputs, p, 2, Fair, 4);
    EXPECT_EQ(one.clustering, four.clustering);
    std::reverse(inputs.begin(), inputs.end());
    const ConsensusResult rev = FairConsensusOffline(inputs, p, 2, Fair, 1);
    EXPECT_DOUBLE_EQ(one.objective, rev.objective);
  }
}

TEST(ConsensusOfflineTest, WithinAlphaPlusTwoOfOptimum) {
  const ColorProfile p({0, 1, 0, 0, 1, 0});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::vector<Clustering> inputs;
    for (int i = 0; i < 3; ++i) {
      inputs.push_back(gen::RandomClustering(6, seed * 7 + i));
    }
    const ConsensusResult r = FairConsensusOffline(inputs, p, 1, Fair);
    ASSERT_TRUE(IsFair(r.clustering, p));
    // Observed alpha of the closest-fair solver on these inputs.
    double alpha = 1;
    for (const Clustering& c : inputs) {
      const std::int64_t opt = oracle::ClosestFair(c, p).dist;
      const std::int64_t got = Dist(c, Fair(c, p));
      if (opt > 0) alpha = std::max(alpha, static_cast<double>(got) / opt);
    }
    const auto best = oracle::FairConsensus(inputs, p, 1);
    EXPECT_LE(r.objective, (alpha + 2) * best.objective + 1e-9);
  }
}

}  // namespace
}  // namespace robustfair
