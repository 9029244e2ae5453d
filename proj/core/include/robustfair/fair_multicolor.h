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

// Closest fair clustering for any number of colors: equal-size colors via
// hierarchical block balancing, arbitrary ratios via a p-divisible pass and
// block-wise scaling equalization.

#ifndef ROBUSTFAIR_FAIR_MULTICOLOR_H_
#define ROBUSTFAIR_FAIR_MULTICOLOR_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "robustfair/clustering.h"

namespace robustfair {

struct MultiGmResult {
  ClusterList merged;    // equal counts of every color of both blocks
  ClusterList residual;  // what was left unpaired; empty when totals match
};

// Greedily pairs sets of `set1` (balanced over `block1`) with sets of `set2`
// (balanced over `block2`), trimming the larger set of each pair down to the
// smaller one's size, smallest ids first. Throws PreconditionError if the
// blocks differ in size or a set is not balanced over its block.
MultiGmResult MultiGm(ClusterList set1, ClusterList set2,
                      std::span<const int> colors, std::span<const int> block1,
                      std::span<const int> block2);

// Makes the colors of `group` (a power-of-two count of equal-size colors)
// equally represented in every cluster, doubling the balanced block size each
// iteration. Other colors stay put. With `check`, the per-iteration block
// invariant is verified and a violation throws std::logic_error.
ClusterList BalanceColorGroup(ClusterList clusters, std::span<const int> colors,
                              std::span<const int> group, bool check = true);

// Throws InputError unless all colors have equal size and their number is a
// power of two.
Clustering FairPowerOfTwo(const Clustering& c, const ColorProfile& profile);

// A set of base colors treated as one color. A unit of it is `unit[k]`
// vertices of each base color `colors[k]`; its scale in a cluster is the
// number of whole units there.
struct MetaColor {
  std::vector<int> colors;
  std::vector<std::int64_t> unit;
  std::int64_t weight = 1;  // its share of the global ratio
};

// Equalizes meta-color scales block by block, pairing adjacent blocks each
// round (heaviest meta colors first). Units move from clusters whose second
// block is over-scaled to clusters where it is under-scaled, both in cluster
// order, smallest ids first. Throws PreconditionError unless every cluster
// holds whole units of every meta color with one scale per meta color.
ClusterList MakePdcFairMeta(ClusterList clusters, std::span<const int> colors,
                            std::vector<MetaColor> meta, bool check = true);

// Fair clustering from a p-divisible one; one meta color per base color.
Clustering MakePdcFair(const Clustering& pdc, const ColorProfile& profile);

// Color groups of fair-equi: sizes follow the binary digits of the color
// count, largest first, over consecutive color indices.
std::vector<std::vector<int>> EquiColorGroups(int num_colors);

struct MultiColorStages {
  Clustering intermediate;  // group-balanced (equi) or p-divisible (general)
  Clustering fair;
};

MultiColorStages FairEquiStages(const Clustering& c,
                                const ColorProfile& profile);
Clustering FairEqui(const Clustering& c, const ColorProfile& profile);

// Makes every color count divisible by its ratio entry, one color at a time
// in index order, with the same pass as the two-color case.
Clustering CreatePdcMulti(const Clustering& c, const ColorProfile& profile);

MultiColorStages FairGeneralStages(const Clustering& c,
                                   const ColorProfile& profile);
Clustering FairGeneral(const Clustering& c, const ColorProfile& profile);

enum class FairMethod { kSingleColor, kTwoColor, kEqui, kGeneral };
std::string FairMethodName(FairMethod method);

// Two colors in ratio p:1 with p > 1 use the two-color pipeline, equal-size
// colors use FairEqui, everything else FairGeneral.
FairMethod ChooseFairMethod(const ColorProfile& profile);
Clustering ClosestFair(const Clustering& c, const ColorProfile& profile);

}  // namespace robustfair

#endif  // ROBUSTFAIR_FAIR_MULTICOLOR_H_
