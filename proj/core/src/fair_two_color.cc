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

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "cluster_ops.h"
#include "robustfair/errors.h"

namespace robustfair {
using internal::AddSorted;
using internal::CountColor;
using internal::DropEmpty;
using internal::TakeColor;

ClusterList MakeColorDivisible(ClusterList clusters,
                               std::span<const int> colors, int color,
                               std::int64_t p,
                               DivisibilityTrace* trace) {
  DivisibilityTrace local;
  DivisibilityTrace& tr = trace != nullptr ? *trace : local;
  tr = {};
  internal::SortEach(clusters);
  if (p == 1) {
    DropEmpty(clusters);
    return clusters;
  }

  const int num = static_cast<int>(clusters.size());
  std::vector<std::int64_t> surplus(num), deficit(num);
  std::vector<int> cut, merge, newcut;
  for (int i = 0; i < num; ++i) {
    surplus[i] = CountColor(clusters[i], colors, color) % p;
    deficit[i] = surplus[i] == 0 ? 0 : p - surplus[i];
    if (surplus[i] == 0) {
      newcut.push_back(i);
    } else if (2 * surplus[i] <= p) {
      cut.push_back(i);
    } else {
      merge.push_back(i);
    }
  }
  // Key: cut cost minus merge cost, on the input cluster.
  const auto gain = [&](int i) {
    const std::int64_t size = static_cast<std::int64_t>(clusters[i].size());
    return surplus[i] * (size - surplus[i]) - deficit[i] * size;
  };
  std::vector<std::int64_t> key(num);
  for (int i : merge) key[i] = gain(i);
  std::stable_sort(merge.begin(), merge.end(),
                   [&](int a, int b) { return key[a] > key[b]; });

  std::vector<Vertex> moving;
  std::size_t ci = 0, mj = 0;
  while (ci < cut.size() && mj < merge.size()) {
    const int from = cut[ci], to = merge[mj];
    const std::int64_t k = std::min(surplus[from], deficit[to]);
    moving.clear();
    TakeColor(clusters[from], colors, color, k, moving);
    AddSorted(clusters[to], moving);
    surplus[from] -= k;
    deficit[to] -= k;
    if (surplus[from] == 0) {
      newcut.push_back(from);
      ++ci;
    }
    if (deficit[to] == 0) ++mj;
  }

  if (ci == cut.size() && mj < merge.size()) {
    // Merge case. Remaining receivers are merge[mj..], still in key order.
    tr.merge_case = true;
    std::vector<int> receivers(merge.begin() + mj, merge.end());
    std::vector<bool> is_receiver(num, false);
    for (int i : receivers) {
      is_receiver[i] = true;
      tr.residual_deficit += deficit[i];
    }
    if (tr.residual_deficit % p != 0) {
      throw std::logic_error("residual deficit is not a multiple of p");
    }
    tr.expected_subsets = tr.residual_deficit / p;

    // Cut candidates: (cost, cluster, subset index). Receivers offer their
    // 0th (surplus) subset first; every cluster then offers size-p subsets.
    using Candidate = std::tuple<std::int64_t, int, std::int64_t>;
    std::priority_queue<Candidate, std::vector<Candidate>,
                        std::greater<Candidate>>
        heap;
    std::vector<std::int64_t> blue(num), s(num), size(num);
    const auto push_next = [&](int i, std::int64_t z) {
      if (z == 0) {
        heap.emplace(s[i] * (size[i] - s[i]) - (p - s[i]) * size[i], i, 0);
      } else if (z <= (blue[i] - s[i]) / p) {
        heap.emplace(p * (size[i] - (z * p + s[i])), i, z);
      }
    };
    for (int i : newcut) {
      blue[i] = CountColor(clusters[i], colors, color);
      size[i] = static_cast<std::int64_t>(clusters[i].size());
      s[i] = 0;
      push_next(i, 1);
    }
    for (int i : receivers) {
      blue[i] = CountColor(clusters[i], colors, color);
      size[i] = static_cast<std::int64_t>(clusters[i].size());
      s[i] = blue[i] % p;
      push_next(i, 0);
    }

    std::vector<Vertex> pool;
    std::int64_t need = tr.residual_deficit;
    while (need > 0) {
      if (heap.empty()) {
        throw std::logic_error("no cut left to cover the residual deficit");
      }
      const auto [cost, i, z] = heap.top();
      heap.pop();
      if (z == 0) {
        is_receiver[i] = false;
        TakeColor(clusters[i], colors, color, s[i], pool);
      } else {
        TakeColor(clusters[i], colors, color, p, pool);
      }
      need -= p;
      ++tr.subsets_cut;
      push_next(i, z + 1);
    }
    if (need != 0 || tr.subsets_cut != tr.expected_subsets) {
      throw std::logic_error("merge phase cut count mismatch");
    }

    std::size_t next = 0;
    for (int i : receivers) {
      if (!is_receiver[i]) continue;
      if (next + deficit[i] > pool.size()) {
        throw std::logic_error("cut pool smaller than the deficit");
      }
      AddSorted(clusters[i], std::span<const Vertex>(pool.data() + next,
                                                     deficit[i]));
      next += deficit[i];
    }
    if (next != pool.size()) {
      throw std::logic_error("cut pool larger than the deficit");
    }
  } else if (ci < cut.size()) {
    // Cut case: the leftover surpluses become new clusters of size p.
    std::vector<Vertex> pool;
    for (std::size_t k = ci; k < cut.size(); ++k) {
      TakeColor(clusters[cut[k]], colors, color, surplus[cut[k]], pool);
    }
    if (pool.size() % p != 0) {
      throw std::logic_error("leftover surplus is not a multiple of p");
    }
    for (std::size_t start = 0; start < pool.size(); start += p) {
      clusters.emplace_back(pool.begin() + start, pool.begin() + start + p);
      ++tr.extra_clusters;
    }
  }
  DropEmpty(clusters);
  return clusters;
}

TwoColorRoles TwoColorRolesOf(const ColorProfile& profile) {
  if (profile.num_colors() != 2) {
    throw InputError("expected a two-color profile, got " +
                     std::to_string(profile.num_colors()) + " colors");
  }
  if (profile.ratio(1) == 1) return {0, 1, profile.ratio(0)};
  if (profile.ratio(0) == 1) return {1, 0, profile.ratio(1)};
  throw InputError("ratio " + profile.RatioString() +
                   " is not of the form p:1");
}

Clustering CreatePdcTwoColor(const Clustering& c, const ColorProfile& profile,
                             DivisibilityTrace* trace) {
  if (c.num_vertices() != profile.num_vertices()) {
    throw InputError("clustering and colors cover different universes");
  }
  const TwoColorRoles roles = TwoColorRolesOf(profile);
  return Clustering::FromClusters(
      c.num_vertices(), MakeColorDivisible(c.Clusters(), profile.colors(),
                                           roles.blue, roles.p, trace));
}

Clustering MakeClustersFair(const Clustering& t, const ColorProfile& profile) {
  if (t.num_vertices() != profile.num_vertices()) {
    throw InputError("clustering and colors cover different universes");
  }
  const TwoColorRoles roles = TwoColorRolesOf(profile);
  if (roles.p == 1) throw PreconditionError("MakeClustersFair needs p > 1");
  if (!IsPDivisible(t, profile)) {
    throw PreconditionError("MakeClustersFair needs a p-divisible input");
  }
  const auto& colors = profile.colors();
  ClusterList clusters = t.Clusters();
  std::vector<int> red_heavy, blue_heavy;
  std::vector<std::int64_t> excess(clusters.size(), 0);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const std::int64_t blue = CountColor(clusters[i], colors, roles.blue);
    const std::int64_t red = CountColor(clusters[i], colors, roles.red);
    excess[i] = red - blue / roles.p;  // reds above the fair share
    if (excess[i] > 0) red_heavy.push_back(static_cast<int>(i));
    if (excess[i] < 0) blue_heavy.push_back(static_cast<int>(i));
  }
  std::vector<Vertex> moving;
  std::size_t ri = 0, bj = 0;
  while (ri < red_heavy.size() && bj < blue_heavy.size()) {
    const int from = red_heavy[ri], to = blue_heavy[bj];
    const std::int64_t k = std::min(excess[from], -excess[to]);
    moving.clear();
    TakeColor(clusters[from], colors, roles.red, k, moving);
    AddSorted(clusters[to], moving);
    excess[from] -= k;
    excess[to] += k;
    if (excess[from] == 0) ++ri;
    if (excess[to] == 0) ++bj;
  }
  if (ri != red_heavy.size() || bj != blue_heavy.size()) {
    throw std::logic_error("red surplus and deficit do not balance");
  }
  DropEmpty(clusters);
  return Clustering::FromClusters(t.num_vertices(), clusters);
}

TwoColorStages ClosestFairTwoColorStages(const Clustering& c,
                                         const ColorProfile& profile) {
  const TwoColorRoles roles = TwoColorRolesOf(profile);
  if (roles.p == 1) {
    throw PreconditionError("two-color pipeline needs p > 1");
  }
  TwoColorStages stages;
  stages.pdc = CreatePdcTwoColor(c, profile);
  stages.fair = MakeClustersFair(stages.pdc, profile);
  return stages;
}

Clustering ClosestFairTwoColor(const Clustering& c,
                               const ColorProfile& profile) {
  return ClosestFairTwoColorStages(c, profile).fair;
}

std::vector<Vertex> ThreePartitionInstance::BlueCluster(int i) const {
  std::vector<Vertex> out(p * target);
  std::iota(out.begin(), out.end(), static_cast<Vertex>(i * p * target));
  return out;
}

std::vector<Vertex> ThreePartitionInstance::RedCluster(int j) const {
  const std::int64_t blue_total =
      static_cast<std::int64_t>(items.size() / 3) * p * target;
  const std::int64_t start =
      blue_total + std::accumulate(items.begin(), items.begin() + j, 0LL);
  std::vector<Vertex> out(items[j]);
  std::iota(out.begin(), out.end(), static_cast<Vertex>(start));
  return out;
}

ThreePartitionInstance GenNpHardInstance(std::span<const int> items,
                                         std::int64_t p) {
  if (items.empty() || items.size() % 3 != 0) {
    throw InputError("3-PARTITION needs a positive multiple of 3 items");
  }
  if (p < 2) throw InputError("p must be at least 2");
  const std::int64_t groups = static_cast<std::int64_t>(items.size()) / 3;
  std::int64_t sum = 0;
  for (int x : items) {
    if (x <= 0) throw InputError("items must be positive");
    sum += x;
  }
  if (sum % groups != 0) throw InputError("T = 3 sum / n is not an integer");
  const std::int64_t target = sum / groups;
  for (int x : items) {
    if (!(4LL * x > target && 2LL * x < target)) {
      throw InputError("item " + std::to_string(x) +
                       " outside (T/4, T/2) for T=" + std::to_string(target));
    }
  }
  const std::int64_t blue_total = groups * p * target;
  if (blue_total + sum > (1LL << 30)) throw InputError("instance too large");

  ThreePartitionInstance inst;
  inst.items.assign(items.begin(), items.end());
  inst.p = p;
  inst.target = target;
  const int n = static_cast<int>(blue_total + sum);
  std::vector<int> assignment(n), colors(n);
  for (int v = 0; v < blue_total; ++v) {
    assignment[v] = static_cast<int>(v / (p * target));
    colors[v] = 0;
  }
  int v = static_cast<int>(blue_total);
  for (std::size_t j = 0; j < items.size(); ++j) {
    for (int k = 0; k < items[j]; ++k, ++v) {
      assignment[v] = static_cast<int>(groups + j);
      colors[v] = 1;
    }
  }
  inst.clustering = Clustering(assignment);
  inst.profile = ColorProfile(colors, {p, 1});

  std::int64_t pairs = 0, squares = 0;
  for (int x : items) {
    pairs += static_cast<std::int64_t>(x) * (target - x);
    squares += static_cast<std::int64_t>(x) * x;
  }
  // Each cross pair inside a triple is counted from both ends.
  if (pairs % 2 != 0) throw InputError("odd pair count; malformed instance");
  inst.tau = pairs / 2 + groups * p * target * target;
  inst.split_tau = p * squares + p * p * pairs / 2;
  return inst;
}

std::optional<std::vector<Triple>> SolveThreePartition(
    std::span<const int> items) {
  if (items.empty() || items.size() % 3 != 0) return std::nullopt;
  const std::int64_t sum = std::accumulate(items.begin(), items.end(), 0LL);
  const std::int64_t groups = static_cast<std::int64_t>(items.size()) / 3;
  if (sum % groups != 0) return std::nullopt;
  const std::int64_t target = sum / groups;
  std::vector<bool> used(items.size(), false);
  std::vector<Triple> triples;
  // The smallest unused index always anchors the next triple.
  const auto search = [&](const auto& self) -> bool {
    std::size_t a = 0;
    while (a < items.size() && used[a]) ++a;
    if (a == items.size()) return true;
    used[a] = true;
    for (std::size_t b = a + 1; b < items.size(); ++b) {
      if (used[b]) continue;
      used[b] = true;
      for (std::size_t c = b + 1; c < items.size(); ++c) {
        if (used[c] || items[a] + items[b] + items[c] != target) continue;
        used[c] = true;
        triples.push_back({static_cast<int>(a), static_cast<int>(b),
                           static_cast<int>(c)});
        if (self(self)) return true;
        triples.pop_back();
        used[c] = false;
      }
      used[b] = false;
    }
    used[a] = false;
    return false;
  };
  if (!search(search)) return std::nullopt;
  return triples;
}

namespace {

void CheckTriples(const ThreePartitionInstance& inst,
                  std::span<const Triple> triples) {
  if (triples.size() * 3 != inst.items.size()) {
    throw InputError("need one triple per blue cluster");
  }
  std::vector<bool> seen(inst.items.size(), false);
  for (const Triple& t : triples) {
    std::int64_t sum = 0;
    for (int j : t) {
      if (j < 0 || j >= static_cast<int>(seen.size()) || seen[j]) {
        throw InputError("triples must partition the items");
      }
      seen[j] = true;
      sum += inst.items[j];
    }
    if (sum != inst.target) throw InputError("triple does not sum to T");
  }
}

}  // namespace

Clustering ThreePartitionWitness(const ThreePartitionInstance& inst,
                                 std::span<const Triple> triples) {
  CheckTriples(inst, triples);
  ClusterList clusters;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    std::vector<Vertex> cluster = inst.BlueCluster(static_cast<int>(i));
    for (int j : triples[i]) {
      const std::vector<Vertex> red = inst.RedCluster(j);
      cluster.insert(cluster.end(), red.begin(), red.end());
    }
    clusters.push_back(std::move(cluster));
  }
  return Clustering::FromClusters(inst.clustering.num_vertices(), clusters);
}

Clustering ThreePartitionSplitWitness(const ThreePartitionInstance& inst,
                                      std::span<const Triple> triples) {
  CheckTriples(inst, triples);
  ClusterList clusters;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const std::vector<Vertex> blue = inst.BlueCluster(static_cast<int>(i));
    std::size_t next = 0;
    for (int j : triples[i]) {
      std::vector<Vertex> cluster = inst.RedCluster(j);
      const std::size_t take = static_cast<std::size_t>(inst.p * inst.items[j]);
      cluster.insert(cluster.end(), blue.begin() + next,
                     blue.begin() + next + take);
      next += take;
      clusters.push_back(std::move(cluster));
    }
  }
  return Clustering::FromClusters(inst.clustering.num_vertices(), clusters);
}

}  // namespace robustfair
