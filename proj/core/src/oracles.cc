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
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "robustfair/errors.h"

namespace robustfair::oracle {
namespace {

using boost::multiprecision::cpp_int;

struct Adjacency {
  // out[v] holds (head, edge id of the host graph)
  std::vector<std::vector<std::pair<Vertex, int>>> out;
};

class Bfs {
 public:
  explicit Bfs(int n) : seen_(n, 0), queue_(n) {}

  bool Reaches(const Adjacency& adj, Vertex s, Vertex t,
               const std::vector<char>& faulty) {
    if (s == t) return true;
    ++stamp_;
    int head = 0, tail = 0;
    queue_[tail++] = s;
    seen_[s] = stamp_;
    while (head < tail) {
      const Vertex u = queue_[head++];
      for (const auto& [w, id] : adj.out[u]) {
        if (faulty[id] || seen_[w] == stamp_) continue;
        if (w == t) return true;
        seen_[w] = stamp_;
        queue_[tail++] = w;
      }
    }
    return false;
  }

 private:
  std::vector<std::uint32_t> seen_;
  std::vector<Vertex> queue_;
  std::uint32_t stamp_ = 0;
};

void Recurse(std::vector<int>& rgs, int i, int max_label,
             const std::function<void(const std::vector<int>&)>& visit,
             std::uint64_t& count) {
  const int n = static_cast<int>(rgs.size());
  if (i == n) {
    ++count;
    visit(rgs);
    return;
  }
  for (int label = 0; label <= max_label + 1; ++label) {
    rgs[i] = label;
    Recurse(rgs, i + 1, std::max(max_label, label), visit, count);
  }
}

std::vector<std::vector<int>> CountsByCluster(std::span<const int> assignment,
                                              const ColorProfile& profile) {
  int k = 0;
  for (int a : assignment) k = std::max(k, a + 1);
  std::vector<std::vector<int>> counts(k,
                                       std::vector<int>(profile.num_colors()));
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    ++counts[assignment[v]][profile.color(static_cast<Vertex>(v))];
  }
  return counts;
}

void CheckUniverse(const Clustering& c, const ColorProfile& profile) {
  if (c.num_vertices() != profile.num_vertices()) {
    throw InputError("clustering and colors cover different universes");
  }
}

template <typename Accept>
PartitionResult Closest(const Clustering& c, int cap, const Accept& accept) {
  const int n = c.num_vertices();
  const std::vector<int>& base = c.assignment();
  PartitionResult best;
  best.dist = -1;
  std::vector<int> best_rgs;
  best.enumerated = ForEachPartition(
      n,
      [&](const std::vector<int>& rgs) {
        if (!accept(rgs)) return;
        std::int64_t d = 0;
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            d += (base[u] == base[v]) != (rgs[u] == rgs[v]);
          }
        }
        // strict: lexicographic order makes the first minimum canonical
        if (best.dist < 0 || d < best.dist) {
          best.dist = d;
          best_rgs = rgs;
        }
      },
      cap);
  if (best.dist < 0) throw InputError("no admissible partition exists");
  best.clustering = Clustering(best_rgs);
  return best;
}

}  // namespace

std::uint64_t BellNumber(int n) {
  if (n < 0) throw InputError("negative set size");
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t ForEachPartition(
    int n, const std::function<void(const std::vector<int>&)>& visit,
    int cap) {
  if (cap > kHardPartitionCap) {
    throw InputError("partition cap above " +
                     std::to_string(kHardPartitionCap));
  }
  if (n < 0 || n > cap) {
    throw InputError("universe of " + std::to_string(n) +
                     " exceeds the oracle cap of " + std::to_string(cap));
  }
  std::vector<int> rgs(n, 0);
  std::uint64_t count = 0;
  if (n == 0) {
    visit(rgs);
    return 1;
  }
  Recurse(rgs, 1, 0, visit, count);
  return count;
}

std::int64_t PairDist(const Clustering& a, const Clustering& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw InputError("clusterings over different universes");
  }
  std::int64_t d = 0;
  for (Vertex u = 0; u < a.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < a.num_vertices(); ++v) {
      d += a.Together(u, v) != b.Together(u, v);
    }
  }
  return d;
}

bool ClusterIsFair(std::span<const int> color_counts,
                   std::span<const std::int64_t> ratio) {
  if (color_counts[0] % ratio[0] != 0) return false;
  const std::int64_t t = color_counts[0] / ratio[0];
  if (t < 1) return false;
  for (std::size_t c = 0; c < ratio.size(); ++c) {
    if (color_counts[c] != t * ratio[c]) return false;
  }
  return true;
}

bool PartitionIsFair(std::span<const int> assignment,
                     const ColorProfile& profile) {
  for (const auto& counts : CountsByCluster(assignment, profile)) {
    if (!ClusterIsFair(counts, profile.ratio())) return false;
  }
  return true;
}

bool PartitionIsPDivisible(std::span<const int> assignment,
                           const ColorProfile& profile) {
  for (const auto& counts : CountsByCluster(assignment, profile)) {
    for (int c = 0; c < profile.num_colors(); ++c) {
      if (counts[c] % profile.ratio(c) != 0) return false;
    }
  }
  return true;
}

FtrsVerdict VerifyFtrs(const DirectedGraph& g, std::span<const Edge> h_edges,
                       std::span<const VertexPair> pairs,
                       const VerifyOptions& options) {
  if (options.k < 0 || options.k > 2) {
    throw InputError("fault budget must be 0, 1 or 2");
  }
  const int n = g.num_vertices();
  const int m = g.num_edges();
  FtrsVerdict verdict;
  for (const VertexPair& p : pairs) {
    if (!g.ContainsVertex(p.s) || !g.ContainsVertex(p.t)) {
      throw InputError("pair vertex out of range");
    }
  }
  Adjacency full, sub;
  full.out.resize(n);
  sub.out.resize(n);
  for (int id = 0; id < m; ++id) {
    full.out[g.edge(id).tail].push_back({g.edge(id).head, id});
  }
  std::vector<char> in_sub(m, 0);
  for (const Edge& e : h_edges) {
    const auto id = (g.ContainsVertex(e.tail) && g.ContainsVertex(e.head))
                        ? g.FindEdge(e.tail, e.head)
                        : std::nullopt;
    if (!id) {
      verdict.passed = false;
      verdict.reason = "edge (" + std::to_string(e.tail) + "," +
                       std::to_string(e.head) + ") is not in the graph";
      return verdict;
    }
    if (in_sub[*id]) continue;
    in_sub[*id] = 1;
    sub.out[e.tail].push_back({e.head, *id});
  }

  Bfs bfs(n);
  std::vector<char> faulty(m, 0);
  const auto check = [&](std::initializer_list<int> fault_ids) {
    ++verdict.fault_sets;
    for (int id : fault_ids) faulty[id] = 1;
    bool ok = true;
    for (const VertexPair& p : pairs) {
      const bool in_g = bfs.Reaches(full, p.s, p.t, faulty);
      if (in_g != bfs.Reaches(sub, p.s, p.t, faulty)) {
        FaultCounterexample cx{p, {}, in_g};
        for (int id : fault_ids) cx.faults.push_back(g.edge(id));
        verdict.passed = false;
        verdict.counterexample = std::move(cx);
        ok = false;
        break;
      }
    }
    for (int id : fault_ids) faulty[id] = 0;
    return ok;
  };

  if (!check({})) return verdict;
  if (options.k >= 1) {
    for (int a = 0; a < m; ++a) {
      if (!check({a})) return verdict;
    }
  }
  if (options.k < 2 || m < 2) return verdict;
  const std::uint64_t two_sets =
      static_cast<std::uint64_t>(m) * (m - 1) / 2;
  if (options.force_exhaustive || two_sets <= options.exhaustive_limit) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (!check({a, b})) return verdict;
      }
    }
    return verdict;
  }
  verdict.sampled = true;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const int a = pick(rng);
    int b = pick(rng);
    while (b == a) b = pick(rng);
    if (!check({std::min(a, b), std::max(a, b)})) return verdict;
  }
  return verdict;
}

PartitionResult ClosestFair(const Clustering& c, const ColorProfile& profile,
                            int cap) {
  CheckUniverse(c, profile);
  return Closest(c, cap, [&](const std::vector<int>& rgs) {
    return PartitionIsFair(rgs, profile);
  });
}

PartitionResult ClosestPdc(const Clustering& c, const ColorProfile& profile,
                           int cap) {
  CheckUniverse(c, profile);
  return Closest(c, cap, [&](const std::vector<int>& rgs) {
    return PartitionIsPDivisible(rgs, profile);
  });
}

PartitionResult ClosestFairCache::Get(const Clustering& c,
                                      const ColorProfile& profile) {
  std::ostringstream key;
  for (int a : c.assignment()) key << a << ',';
  key << '|';
  for (int col : profile.colors()) key << col << ',';
  key << '|' << profile.RatioString();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key.str());
    if (it != memo_.end()) return it->second;
  }
  PartitionResult result = ClosestFair(c, profile, cap_);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(key.str(), result);
  return result;
}

std::size_t ClosestFairCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

double ObjectiveFromDistances(std::span<const std::int64_t> distances,
                              int ell) {
  if (ell < 1) throw InputError("ell must be at least 1");
  long double sum = 0;
  for (std::int64_t d : distances) {
    sum += std::pow(static_cast<long double>(d), ell);
  }
  if (ell == 1) return static_cast<double>(sum);
  return static_cast<double>(std::pow(sum, 1.0L / ell));
}

ConsensusResult FairConsensus(std::span<const Clustering> inputs,
                              const ColorProfile& profile, int ell, int cap) {
  if (inputs.empty()) throw InputError("no input clusterings");
  if (ell < 1) throw InputError("ell must be at least 1");
  for (const Clustering& c : inputs) CheckUniverse(c, profile);
  const int n = profile.num_vertices();
  ConsensusResult best;
  std::optional<cpp_int> best_sum;
  std::vector<int> best_rgs;
  std::vector<std::int64_t> dists(inputs.size());
  best.enumerated = ForEachPartition(
      n,
      [&](const std::vector<int>& rgs) {
        if (!PartitionIsFair(rgs, profile)) return;
        cpp_int sum = 0;
        for (std::size_t j = 0; j < inputs.size(); ++j) {
          const std::vector<int>& a = inputs[j].assignment();
          std::int64_t d = 0;
          for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
              d += (a[u] == a[v]) != (rgs[u] == rgs[v]);
            }
          }
          dists[j] = d;
          sum += boost::multiprecision::pow(cpp_int(d), ell);
        }
        if (!best_sum || sum < *best_sum) {
          best_sum = sum;
          best_rgs = rgs;
          best.distances = dists;
        }
      },
      cap);
  best.clustering = Clustering(best_rgs);
  best.objective = ObjectiveFromDistances(best.distances, ell);
  return best;
}

Rational AssignmentCost(const WeightedCCInstance& inst,
                        std::span<const int> assignment) {
  Rational cost = 0;
  const int n = inst.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      cost += assignment[u] == assignment[v] ? 1 - inst.w_plus(u, v)
                                             : inst.w_plus(u, v);
    }
  }
  return cost;
}

CcResult CcOpt(const WeightedCCInstance& inst, const ColorProfile* profile,
               int cap) {
  if (profile != nullptr && profile->num_vertices() != inst.num_vertices()) {
    throw InputError("instance and colors cover different universes");
  }
  CcResult best;
  std::optional<Rational> best_cost;
  std::vector<int> best_rgs;
  best.enumerated = ForEachPartition(
      inst.num_vertices(),
      [&](const std::vector<int>& rgs) {
        if (profile != nullptr && !PartitionIsFair(rgs, *profile)) return;
        Rational cost = AssignmentCost(inst, rgs);
        if (!best_cost || cost < *best_cost) {
          best_cost = cost;
          best_rgs = rgs;
        }
      },
      cap);
  best.clustering = Clustering(best_rgs);
  best.cost = *best_cost;
  return best;
}

}  // namespace robustfair::oracle
