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

// Small vertex-list edits shared by the fairness passes. Internal.

#ifndef ROBUSTFAIR_CLUSTER_OPS_H_
#define ROBUSTFAIR_CLUSTER_OPS_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "robustfair/clustering.h"

namespace robustfair::internal {

// Removes k vertices of `color` from the sorted `cluster`, smallest ids
// first, appending them to `out`.
inline void TakeColor(std::vector<Vertex>& cluster, std::span<const int> colors,
                      int color, std::int64_t k, std::vector<Vertex>& out) {
  if (k <= 0) return;
  std::vector<Vertex> kept;
  kept.reserve(cluster.size());
  for (Vertex v : cluster) {
    if (k > 0 && colors[v] == color) {
      out.push_back(v);
      --k;
    } else {
      kept.push_back(v);
    }
  }
  if (k > 0) throw std::logic_error("cluster ran out of vertices to move");
  cluster = std::move(kept);
}

// Merges sorted `add` into sorted `cluster`.
inline void AddSorted(std::vector<Vertex>& cluster,
                      std::span<const Vertex> add) {
  std::vector<Vertex> sorted(add.begin(), add.end());
  std::sort(sorted.begin(), sorted.end());
  const auto mid = static_cast<std::ptrdiff_t>(cluster.size());
  cluster.insert(cluster.end(), sorted.begin(), sorted.end());
  std::inplace_merge(cluster.begin(), cluster.begin() + mid, cluster.end());
}

inline std::int64_t CountColor(const std::vector<Vertex>& cluster,
                               std::span<const int> colors, int color) {
  return std::count_if(cluster.begin(), cluster.end(),
                       [&](Vertex v) { return colors[v] == color; });
}

inline void DropEmpty(ClusterList& clusters) {
  std::erase_if(clusters, [](const auto& c) { return c.empty(); });
}

inline void SortEach(ClusterList& clusters) {
  for (auto& cluster : clusters) std::sort(cluster.begin(), cluster.end());
}

}  // namespace robustfair::internal

#endif  // ROBUSTFAIR_CLUSTER_OPS_H_
