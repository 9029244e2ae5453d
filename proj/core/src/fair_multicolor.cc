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

#include "robustfair/fair_multicolor.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "cluster_ops.h"
#include "robustfair/errors.h"
#include "robustfair/fair_two_color.h"

namespace robustfair {
namespace {

using internal::AddSorted;
using internal::CountColor;
using internal::DropEmpty;
using internal::SortEach;
using internal::TakeColor;

// Per-color count of `block` in `set` if all are equal and nothing else is
// present, else -1.
std::int64_t BalancedCount(const std::vector<Vertex>& set,
                           std::span<const int> colors,
                           std::span<const int> block) {
  const std::int64_t each = CountColor(set, colors, block[0]);
  for (int c : block) {
    if (CountColor(set, colors, c) != each) return -1;
  }
  if (each * static_cast<std::int64_t>(block.size()) !=
      static_cast<std::int64_t>(set.size())) {
    return -1;
  }
  return each;
}

// Moves `per_color` vertices of each color of `block` from `from` to `out`.
void TakeBlock(std::vector<Vertex>& from, std::span<const int> colors,
               std::span<const int> block, std::int64_t per_color,
               std::vector<Vertex>& out) {
  for (int c : block) TakeColor(from, colors, c, per_color, out);
}

bool IsPowerOfTwo(int x) { return x > 0 && (x & (x - 1)) == 0; }

void CheckUniverse(const Clustering& c, const ColorProfile& profile) {
  if (c.num_vertices() != profile.num_vertices()) {
    throw InputError("clustering and colors cover different universes");
  }
}

}  // namespace

MultiGmResult MultiGm(ClusterList set1, ClusterList set2,
                      std::span<const int> colors, std::span<const int> block1,
                      std::span<const int> block2) {
  if (block1.size() != block2.size() || block1.empty()) {
    throw PreconditionError("multi-GM blocks must be nonempty and equal-sized");
  }
  SortEach(set1);
  SortEach(set2);
  std::vector<std::int64_t> each1, each2;
  for (const auto& s : set1) {
    each1.push_back(BalancedCount(s, colors, block1));
    if (each1.back() < 0) throw PreconditionError("unbalanced set in Set1");
  }
  for (const auto& s : set2) {
    each2.push_back(BalancedCount(s, colors, block2));
    if (each2.back() < 0) throw PreconditionError("unbalanced set in Set2");
  }

  MultiGmResult result;
  std::size_t i = 0, j = 0;
  const auto skip_empty = [](const ClusterList& sets, std::size_t& k) {
    while (k < sets.size() && sets[k].empty()) ++k;
  };
  skip_empty(set1, i);
  skip_empty(set2, j);
  while (i < set1.size() && j < set2.size()) {
    std::vector<Vertex> merged;
    if (each1[i] >= each2[j]) {
      TakeBlock(set1[i], colors, block1, each2[j], merged);
      each1[i] -= each2[j];
      merged.insert(merged.end(), set2[j].begin(), set2[j].end());
      set2[j].clear();
      ++j;
    } else {
      TakeBlock(set2[j], colors, block2, each1[i], merged);
      each2[j] -= each1[i];
      merged.insert(merged.end(), set1[i].begin(), set1[i].end());
      set1[i].clear();
      ++i;
    }
    std::sort(merged.begin(), merged.end());
    result.merged.push_back(std::move(merged));
    skip_empty(set1, i);
    skip_empty(set2, j);
  }
  for (; i < set1.size(); ++i) {
    if (!set1[i].empty()) result.residual.push_back(std::move(set1[i]));
  }
  for (; j < set2.size(); ++j) {
    if (!set2[j].empty()) result.residual.push_back(std::move(set2[j]));
  }
  return result;
}

ClusterList BalanceColorGroup(ClusterList clusters, std::span<const int> colors,
                              std::span<const int> group, bool check) {
  const int size = static_cast<int>(group.size());
  if (!IsPowerOfTwo(size)) {
    throw InputError("color group size must be a power of two");
  }
  SortEach(clusters);
  for (int half = 1; half < size; half *= 2) {
    for (int start = 0; start < size; start += 2 * half) {
      const std::span<const int> left = group.subspan(start, half);
      const std::span<const int> right = group.subspan(start + half, half);
      ClusterList surplus_left, surplus_right;
      for (auto& cluster : clusters) {
        const std::int64_t a = CountColor(cluster, colors, left[0]);
        const std::int64_t b = CountColor(cluster, colors, right[0]);
        std::vector<Vertex> surplus;
        if (a > b) {
          TakeBlock(cluster, colors, left, a - b, surplus);
          surplus_left.push_back(std::move(surplus));
        } else if (b > a) {
          TakeBlock(cluster, colors, right, b - a, surplus);
          surplus_right.push_back(std::move(surplus));
        }
      }
      MultiGmResult gm = MultiGm(std::move(surplus_left),
                                 std::move(surplus_right), colors, left, right);
      if (!gm.residual.empty()) {
        throw std::logic_error("block surpluses do not balance");
      }
      for (auto& merged : gm.merged) clusters.push_back(std::move(merged));
    }
    DropEmpty(clusters);
    if (check) {
      // Every block of size 2 * half is now balanced in every cluster.
      for (const auto& cluster : clusters) {
        for (int start = 0; start < size; start += 2 * half) {
          const std::int64_t each = CountColor(cluster, colors, group[start]);
          for (int k = start; k < start + 2 * half; ++k) {
            if (CountColor(cluster, colors, group[k]) != each) {
              throw std::logic_error("block invariant violated at size " +
                                     std::to_string(2 * half));
            }
          }
        }
      }
    }
  }
  return clusters;
}

Clustering FairPowerOfTwo(const Clustering& c, const ColorProfile& profile) {
  CheckUniverse(c, profile);
  if (!profile.equal_sizes()) {
    throw InputError("power-of-two balancing needs equal-size colors");
  }
  if (!IsPowerOfTwo(profile.num_colors())) {
    throw InputError("number of colors is not a power of two");
  }
  std::vector<int> group(profile.num_colors());
  std::iota(group.begin(), group.end(), 0);
  return Clustering::FromClusters(
      c.num_vertices(),
      BalanceColorGroup(c.Clusters(), profile.colors(), group));
}

ClusterList MakePdcFairMeta(ClusterList clusters, std::span<const int> colors,
                            std::vector<MetaColor> meta, bool check) {
  SortEach(clusters);
  const int r = static_cast<int>(meta.size());
  for (const MetaColor& m : meta) {
    if (m.colors.empty() || m.colors.size() != m.unit.size()) {
      throw InputError("meta color needs one unit per base color");
    }
    for (std::int64_t u : m.unit) {
      if (u < 1) throw InputError("meta color units must be positive");
    }
  }
  // Heaviest first; ties keep the given order.
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return meta[a].weight > meta[b].weight;
  });

  const auto scale = [&](const std::vector<Vertex>& cluster, int m) {
    std::int64_t s = -1;
    for (std::size_t k = 0; k < meta[m].colors.size(); ++k) {
      const std::int64_t count = CountColor(cluster, colors, meta[m].colors[k]);
      if (count % meta[m].unit[k] != 0) return std::int64_t{-1};
      const std::int64_t here = count / meta[m].unit[k];
      if (s >= 0 && here != s) return std::int64_t{-1};
      s = here;
    }
    return s;
  };
  for (const auto& cluster : clusters) {
    for (int m = 0; m < r; ++m) {
      if (scale(cluster, m) < 0) {
        throw PreconditionError("input is not divisible by the meta units");
      }
    }
  }

  std::vector<std::vector<int>> blocks;
  for (int m : order) blocks.push_back({m});
  std::vector<Vertex> moving;
  while (blocks.size() > 1) {
    std::vector<std::vector<int>> next;
    for (std::size_t b = 0; b + 1 < blocks.size(); b += 2) {
      const std::vector<int>& first = blocks[b];
      const std::vector<int>& second = blocks[b + 1];
      // Scale of a block: its meta colors already agree, the min is exact.
      const auto block_scale = [&](const std::vector<Vertex>& cluster,
                                   const std::vector<int>& block) {
        std::int64_t s = scale(cluster, block[0]);
        for (int m : block) s = std::min(s, scale(cluster, m));
        return s;
      };
      std::vector<std::int64_t> give(clusters.size(), 0);
      std::vector<std::int64_t> take(clusters.size(), 0);
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        const std::int64_t x = block_scale(clusters[i], first);
        const std::int64_t y = block_scale(clusters[i], second);
        if (x < y) give[i] = y - x;
        if (x > y) take[i] = x - y;
      }
      std::size_t donor = 0, receiver = 0;
      const auto advance = [&]() {
        while (donor < clusters.size() && give[donor] == 0) ++donor;
        while (receiver < clusters.size() && take[receiver] == 0) ++receiver;
      };
      advance();
      while (donor < clusters.size() && receiver < clusters.size()) {
        const std::int64_t units = std::min(give[donor], take[receiver]);
        moving.clear();
        for (int m : second) {
          for (std::size_t k = 0; k < meta[m].colors.size(); ++k) {
            TakeColor(clusters[donor], colors, meta[m].colors[k],
                      units * meta[m].unit[k], moving);
          }
        }
        AddSorted(clusters[receiver], moving);
        give[donor] -= units;
        take[receiver] -= units;
        advance();
      }
      if (donor < clusters.size() || receiver < clusters.size()) {
        throw std::logic_error("block scales do not balance globally");
      }
      std::vector<int> joined = first;
      joined.insert(joined.end(), second.begin(), second.end());
      next.push_back(std::move(joined));
    }
    if (blocks.size() % 2 == 1) next.push_back(blocks.back());
    blocks = std::move(next);
    DropEmpty(clusters);
    if (check) {
      for (const auto& cluster : clusters) {
        for (const auto& block : blocks) {
          for (int m : block) {
            if (scale(cluster, m) != scale(cluster, block[0])) {
              throw std::logic_error("block scales differ after a round");
            }
          }
        }
      }
    }
  }
  return clusters;
}

Clustering MakePdcFair(const Clustering& pdc, const ColorProfile& profile) {
  CheckUniverse(pdc, profile);
  std::vector<MetaColor> meta;
  for (int c = 0; c < profile.num_colors(); ++c) {
    meta.push_back({{c}, {profile.ratio(c)}, profile.ratio(c)});
  }
  return Clustering::FromClusters(
      pdc.num_vertices(),
      MakePdcFairMeta(pdc.Clusters(), profile.colors(), std::move(meta)));
}

std::vector<std::vector<int>> EquiColorGroups(int num_colors) {
  std::vector<std::vector<int>> groups;
  int next = 0;
  for (int bit = 30; bit >= 0; --bit) {
    if ((num_colors >> bit & 1) == 0) continue;
    std::vector<int> group(1 << bit);
    std::iota(group.begin(), group.end(), next);
    next += 1 << bit;
    groups.push_back(std::move(group));
  }
  return groups;
}

MultiColorStages FairEquiStages(const Clustering& c,
                                const ColorProfile& profile) {
  CheckUniverse(c, profile);
  if (!profile.equal_sizes()) {
    throw InputError("fair-equi needs equal-size colors");
  }
  const auto& colors = profile.colors();
  const std::vector<std::vector<int>> groups =
      EquiColorGroups(profile.num_colors());
  ClusterList clusters = c.Clusters();
  for (const auto& group : groups) {
    if (group.size() > 1) {
      clusters = BalanceColorGroup(std::move(clusters), colors, group);
    }
  }
  MultiColorStages stages;
  stages.intermediate = Clustering::FromClusters(c.num_vertices(), clusters);
  std::vector<MetaColor> meta;
  for (const auto& group : groups) {
    meta.push_back({group, std::vector<std::int64_t>(group.size(), 1),
                    static_cast<std::int64_t>(group.size())});
  }
  stages.fair = Clustering::FromClusters(
      c.num_vertices(),
      MakePdcFairMeta(std::move(clusters), colors, std::move(meta)));
  return stages;
}

Clustering FairEqui(const Clustering& c, const ColorProfile& profile) {
  return FairEquiStages(c, profile).fair;
}

Clustering CreatePdcMulti(const Clustering& c, const ColorProfile& profile) {
  CheckUniverse(c, profile);
  ClusterList clusters = c.Clusters();
  for (int color = 0; color < profile.num_colors(); ++color) {
    clusters = MakeColorDivisible(std::move(clusters), profile.colors(), color,
                                  profile.ratio(color));
  }
  return Clustering::FromClusters(c.num_vertices(), clusters);
}

MultiColorStages FairGeneralStages(const Clustering& c,
                                   const ColorProfile& profile) {
  MultiColorStages stages;
  stages.intermediate = CreatePdcMulti(c, profile);
  stages.fair = MakePdcFair(stages.intermediate, profile);
  return stages;
}

Clustering FairGeneral(const Clustering& c, const ColorProfile& profile) {
  return FairGeneralStages(c, profile).fair;
}

std::string FairMethodName(FairMethod method) {
  switch (method) {
    case FairMethod::kSingleColor:
      return "single-color";
    case FairMethod::kTwoColor:
      return "two-color";
    case FairMethod::kEqui:
      return "fair-equi";
    case FairMethod::kGeneral:
      return "fair-general";
  }
  return "unknown";
}

FairMethod ChooseFairMethod(const ColorProfile& profile) {
  if (profile.num_colors() <= 1) return FairMethod::kSingleColor;
  if (profile.equal_sizes()) return FairMethod::kEqui;
  if (profile.num_colors() == 2 &&
      (profile.ratio(0) == 1 || profile.ratio(1) == 1)) {
    return FairMethod::kTwoColor;
  }
  return FairMethod::kGeneral;
}

Clustering ClosestFair(const Clustering& c, const ColorProfile& profile) {
  CheckUniverse(c, profile);
  switch (ChooseFairMethod(profile)) {
    case FairMethod::kSingleColor:
      return c;
    case FairMethod::kTwoColor:
      return ClosestFairTwoColor(c, profile);
    case FairMethod::kEqui:
      return FairEqui(c, profile);
    case FairMethod::kGeneral:
      return FairGeneral(c, profile);
  }
  return c;
}

}  // namespace robustfair
