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

// Closest fair clustering for two colors in ratio p:1 (p > 1): a p-divisible
// pass followed by a red redistribution pass, plus the 3-PARTITION instance
// generator used for the hardness reduction.

#ifndef ROBUSTFAIR_FAIR_TWO_COLOR_H_
#define ROBUSTFAIR_FAIR_TWO_COLOR_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "robustfair/clustering.h"

namespace robustfair {

// What one divisibility pass did. `subsets_cut` and `expected_subsets` only
// move in the merge case, where they must agree.
struct DivisibilityTrace {
  bool merge_case = false;
  std::int64_t residual_deficit = 0;  // W
  std::int64_t subsets_cut = 0;
  std::int64_t expected_subsets = 0;  // W / p
  int extra_clusters = 0;
};

// Makes the count of `color` in every cluster a multiple of p, leaving other
// colors where they are. Clusters are first split into CUT (surplus at most
// p/2), MERGE (larger surplus) and already divisible ones; CUT surpluses fill
// MERGE deficits in order of decreasing cut-minus-merge cost. Leftover MERGE
// deficits are covered by the cheapest cuts, leftover CUT surpluses become
// new single-color clusters of size p. Vertices move smallest id first and
// ties go to the earlier cluster. Output keeps the input cluster order,
// followed by the new clusters, with empty clusters dropped.
ClusterList MakeColorDivisible(ClusterList clusters,
                               std::span<const int> colors, int color,
                               std::int64_t p,
                               DivisibilityTrace* trace = nullptr);

// Which color of a p:1 profile is the p side. Throws InputError unless the
// profile has two colors and one ratio entry equal to 1.
struct TwoColorRoles {
  int blue = 0;
  int red = 1;
  std::int64_t p = 1;
};
TwoColorRoles TwoColorRolesOf(const ColorProfile& profile);

// p-divisible clustering close to `c`. p == 1 returns `c`.
Clustering CreatePdcTwoColor(const Clustering& c, const ColorProfile& profile,
                             DivisibilityTrace* trace = nullptr);

// Fair clustering from a p-divisible one by moving surplus reds of red-heavy
// clusters into blue-heavy ones, in input order, smallest ids first. Throws
// PreconditionError if `t` is not p-divisible or p == 1.
Clustering MakeClustersFair(const Clustering& t, const ColorProfile& profile);

struct TwoColorStages {
  Clustering pdc;
  Clustering fair;
};

TwoColorStages ClosestFairTwoColorStages(const Clustering& c,
                                         const ColorProfile& profile);
// MakeClustersFair(CreatePdcTwoColor(c)). Throws PreconditionError if p == 1.
Clustering ClosestFairTwoColor(const Clustering& c,
                               const ColorProfile& profile);

// closest-p-fair instance built from a 3-PARTITION instance: n/3 blue
// clusters of size pT and one red cluster of size x_j per item.
struct ThreePartitionInstance {
  std::vector<int> items;
  std::int64_t p = 2;
  std::int64_t target = 0;  // T
  Clustering clustering;
  ColorProfile profile;
  std::int64_t tau = 0;        // 1/2 sum x_j (T - x_j) + (n/3) p T^2
  std::int64_t split_tau = 0;  // p sum x_j^2 + p^2/2 sum x_j (T - x_j)

  // Vertices of blue cluster i and of red cluster j.
  std::vector<Vertex> BlueCluster(int i) const;
  std::vector<Vertex> RedCluster(int j) const;
};

// Throws InputError unless |items| is a positive multiple of 3, T is an
// integer, p >= 2 and T/4 < x_j < T/2 for every item.
ThreePartitionInstance GenNpHardInstance(std::span<const int> items,
                                         std::int64_t p);

using Triple = std::array<int, 3>;  // item indices

// Exhaustive search for a partition into triples summing to T.
std::optional<std::vector<Triple>> SolveThreePartition(
    std::span<const int> items);

// Blue cluster i joined with the three red clusters of triples[i]; its
// distance to the instance clustering is `tau`.
Clustering ThreePartitionWitness(const ThreePartitionInstance& inst,
                                 std::span<const Triple> triples);

// Each red cluster joined with p x_j blue vertices of its triple's blue
// cluster; distance `split_tau`.
Clustering ThreePartitionSplitWitness(const ThreePartitionInstance& inst,
                                      std::span<const Triple> triples);

}  // namespace robustfair

#endif  // ROBUSTFAIR_FAIR_TWO_COLOR_H_
