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

// Brute-force ground truth. Everything here works from the definitions
// alone and never calls into the algorithm modules.

#ifndef ROBUSTFAIR_ORACLES_H_
#define ROBUSTFAIR_ORACLES_H_

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robustfair/clustering.h"
#include "robustfair/graph.h"
#include "robustfair/rational.h"

namespace robustfair::oracle {

inline constexpr int kDefaultPartitionCap = 10;
inline constexpr int kHardPartitionCap = 12;
inline constexpr std::uint64_t kExhaustiveFaultPairLimit = 5000;

std::uint64_t BellNumber(int n);

// Visits every set partition of {0, ..., n-1} as a restricted growth string,
// in lexicographic order. Throws InputError if n exceeds `cap` or `cap`
// exceeds kHardPartitionCap. Returns the number visited.
std::uint64_t ForEachPartition(
    int n, const std::function<void(const std::vector<int>&)>& visit,
    int cap = kDefaultPartitionCap);

// Number of pairs on which a and b disagree, by pair enumeration.
std::int64_t PairDist(const Clustering& a, const Clustering& b);

bool ClusterIsFair(std::span<const int> color_counts,
                   std::span<const std::int64_t> ratio);
bool PartitionIsFair(std::span<const int> assignment,
                     const ColorProfile& profile);
bool PartitionIsPDivisible(std::span<const int> assignment,
                           const ColorProfile& profile);

struct VerifyOptions {
  int k = 2;
  // Above this many two-edge fault sets only `samples` of them are tried.
  std::uint64_t exhaustive_limit = kExhaustiveFaultPairLimit;
  bool force_exhaustive = false;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
};

struct FaultCounterexample {
  VertexPair pair;
  std::vector<Edge> faults;
  bool reachable_in_graph = false;  // the subgraph says the opposite
};

struct FtrsVerdict {
  bool passed = true;
  bool sampled = false;
  std::uint64_t fault_sets = 0;
  std::optional<FaultCounterexample> counterexample;
  std::string reason;  // set when the subgraph itself is invalid
};

// Checks s ~> t in G \ F iff s ~> t in H \ F for every pair and every F of
// at most k edges of G.
FtrsVerdict VerifyFtrs(const DirectedGraph& g, std::span<const Edge> h_edges,
                       std::span<const VertexPair> pairs,
                       const VerifyOptions& options = {});

struct PartitionResult {
  Clustering clustering;
  std::int64_t dist = 0;
  std::uint64_t enumerated = 0;
};

// Fair partition nearest to c; ties go to the smallest canonical form.
PartitionResult ClosestFair(const Clustering& c, const ColorProfile& profile,
                            int cap = kDefaultPartitionCap);
// Same over p-divisible partitions.
PartitionResult ClosestPdc(const Clustering& c, const ColorProfile& profile,
                           int cap = kDefaultPartitionCap);

// Memoizes ClosestFair by the instance text. Safe to share across threads.
class ClosestFairCache {
 public:
  explicit ClosestFairCache(int cap = kDefaultPartitionCap) : cap_(cap) {}
  PartitionResult Get(const Clustering& c, const ColorProfile& profile);
  std::size_t size() const;

 private:
  int cap_;
  mutable std::mutex mu_;
  std::map<std::string, PartitionResult> memo_;
};

struct ConsensusResult {
  Clustering clustering;
  std::vector<std::int64_t> distances;
  double objective = 0;
  std::uint64_t enumerated = 0;
};

// Fair partition minimizing the sum of dist^ell to the inputs, exactly.
ConsensusResult FairConsensus(std::span<const Clustering> inputs,
                              const ColorProfile& profile, int ell,
                              int cap = kDefaultPartitionCap);

// Objective as the library reports it: the sum for ell = 1, else the ell-th
// root of the power sum.
double ObjectiveFromDistances(std::span<const std::int64_t> distances,
                              int ell);

struct CcResult {
  Clustering clustering;
  Rational cost;
  std::uint64_t enumerated = 0;
};

Rational AssignmentCost(const WeightedCCInstance& inst,
                        std::span<const int> assignment);

// Cheapest partition, or cheapest fair one when a profile is given.
CcResult CcOpt(const WeightedCCInstance& inst,
               const ColorProfile* profile = nullptr,
               int cap = kDefaultPartitionCap);

}  // namespace robustfair::oracle

#endif  // ROBUSTFAIR_ORACLES_H_
