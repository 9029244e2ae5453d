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

#include "robustfair/clustering.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "robustfair/errors.h"

namespace robustfair {
namespace {

std::int64_t Choose2(std::int64_t k) { return k * (k - 1) / 2; }

void CheckSameUniverse(const Clustering& a, const Clustering& b) {
  if (a.num_vertices() != b.num_vertices()) {
    std::ostringstream msg;
    msg << "universe mismatch: " << a.num_vertices() << " vs "
        << b.num_vertices();
    throw InputError(msg.str());
  }
}

}  // namespace

Clustering::Clustering(std::span<const int> assignment) {
  assignment_.resize(assignment.size());
  std::vector<int> relabel;
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    const int label = assignment[v];
    if (label < 0) throw InputError("negative cluster label");
    if (static_cast<std::size_t>(label) >= relabel.size()) {
      relabel.resize(label + 1, -1);
    }
    if (relabel[label] < 0) relabel[label] = num_clusters_++;
    assignment_[v] = relabel[label];
  }
}

Clustering Clustering::FromClusters(int num_vertices,
                                    const ClusterList& clusters) {
  std::vector<int> assignment(num_vertices, -1);
  int label = 0;
  for (const auto& cluster : clusters) {
    if (cluster.empty()) continue;
    for (Vertex v : cluster) {
      if (v < 0 || v >= num_vertices) {
        throw InputError("clustered vertex " + std::to_string(v) +
                         " out of range");
      }
      if (assignment[v] >= 0) {
        throw InputError("vertex " + std::to_string(v) + " clustered twice");
      }
      assignment[v] = label;
    }
    ++label;
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (assignment[v] < 0) {
      throw InputError("vertex " + std::to_string(v) + " not clustered");
    }
  }
  return Clustering(assignment);
}

Clustering Clustering::Singletons(int num_vertices) {
  std::vector<int> assignment(num_vertices);
  std::iota(assignment.begin(), assignment.end(), 0);
  return Clustering(assignment);
}

Clustering Clustering::OneCluster(int num_vertices) {
  return Clustering(std::vector<int>(num_vertices, 0));
}

ClusterList Clustering::Clusters() const {
  ClusterList clusters(num_clusters_);
  for (int v = 0; v < num_vertices(); ++v) {
    clusters[assignment_[v]].push_back(v);
  }
  return clusters;
}

std::string Clustering::ToString() const {
  std::ostringstream out;
  out << '{';
  bool first_cluster = true;
  for (const auto& cluster : Clusters()) {
    if (!first_cluster) out << ',';
    first_cluster = false;
    out << '{';
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      if (i > 0) out << ',';
      out << cluster[i];
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

ColorProfile::ColorProfile(std::vector<int> colors, int num_colors)
    : colors_(std::move(colors)) {
  int d = num_colors;
  if (d == 0) {
    for (int c : colors_) d = std::max(d, c + 1);
  }
  counts_.assign(d, 0);
  for (int c : colors_) {
    if (c < 0 || c >= d) {
      throw InputError("color " + std::to_string(c) + " out of range");
    }
    ++counts_[c];
  }
  int g = 0;
  for (int c = 0; c < d; ++c) {
    if (counts_[c] == 0) {
      throw InputError("color " + std::to_string(c) + " has no vertices");
    }
    g = std::gcd(g, counts_[c]);
  }
  for (int count : counts_) ratio_.push_back(count / g);
}

ColorProfile::ColorProfile(std::vector<int> colors,
                           std::vector<std::int64_t> ratio)
    : ColorProfile(std::move(colors), static_cast<int>(ratio.size())) {
  std::int64_t g = 0;
  for (std::int64_t p : ratio) {
    if (p < 1) throw InputError("ratio entries must be positive");
    g = std::gcd(g, p);
  }
  for (std::int64_t& p : ratio) p /= g;
  if (ratio != ratio_) {
    throw InputError("color counts have ratio " + RatioString() +
                     ", not the declared one");
  }
}

bool ColorProfile::equal_sizes() const {
  return std::all_of(ratio_.begin(), ratio_.end(),
                     [](std::int64_t p) { return p == 1; });
}

std::string ColorProfile::RatioString() const {
  std::string out;
  for (std::size_t c = 0; c < ratio_.size(); ++c) {
    if (c > 0) out += ':';
    out += std::to_string(ratio_[c]);
  }
  return out;
}

std::vector<std::int64_t> ParseRatio(const std::string& text) {
  std::vector<std::int64_t> ratio;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ':')) {
    std::size_t used = 0;
    std::int64_t p = 0;
    try {
      p = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || p < 1) {
      throw InputError("bad ratio '" + text + "'");
    }
    ratio.push_back(p);
  }
  if (ratio.empty()) throw InputError("empty ratio");
  return ratio;
}

std::vector<std::vector<int>> ColorCounts(const ClusterList& clusters,
                                          const ColorProfile& profile) {
  std::vector<std::vector<int>> counts(
      clusters.size(), std::vector<int>(profile.num_colors(), 0));
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (Vertex v : clusters[i]) ++counts[i][profile.color(v)];
  }
  return counts;
}

WeightedCCInstance::WeightedCCInstance(int num_vertices, Rational w_plus)
    : n_(num_vertices) {
  if (w_plus < 0 || w_plus > 1) throw InputError("w+ outside [0, 1]");
  w_plus_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, w_plus);
}

WeightedCCInstance WeightedCCInstance::FromClustering(const Clustering& c) {
  WeightedCCInstance inst(c.num_vertices());
  for (Vertex u = 0; u < c.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < c.num_vertices(); ++v) {
      if (c.Together(u, v)) inst.w_plus_[inst.Index(u, v)] = 1;
    }
  }
  return inst;
}

std::size_t WeightedCCInstance::Index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  // Row u starts after rows 0..u-1, which hold (n-1) + ... + (n-u) entries.
  return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

void WeightedCCInstance::SetWPlus(Vertex u, Vertex v, Rational w) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("bad pair (" + std::to_string(u) + "," +
                     std::to_string(v) + ")");
  }
  if (w < 0 || w > 1) throw InputError("w+ outside [0, 1]");
  w_plus_[Index(u, v)] = w;
}

std::int64_t Dist(const Clustering& a, const Clustering& b) {
  CheckSameUniverse(a, b);
  const int n = a.num_vertices();
  std::vector<std::int64_t> size_a(a.num_clusters(), 0);
  std::vector<std::int64_t> size_b(b.num_clusters(), 0);
  std::vector<std::pair<int, int>> cells(n);
  for (int v = 0; v < n; ++v) {
    ++size_a[a.cluster_of(v)];
    ++size_b[b.cluster_of(v)];
    cells[v] = {a.cluster_of(v), b.cluster_of(v)};
  }
  std::sort(cells.begin(), cells.end());
  std::int64_t together_a = 0, together_b = 0, together_both = 0;
  for (std::int64_t s : size_a) together_a += Choose2(s);
  for (std::int64_t s : size_b) together_b += Choose2(s);
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    together_both += Choose2(static_cast<std::int64_t>(j - i));
    i = j;
  }
  return together_a + together_b - 2 * together_both;
}

bool IsFair(const ClusterList& clusters, const ColorProfile& profile) {
  const int d = profile.num_colors();
  for (const auto& counts : ColorCounts(clusters, profile)) {
    for (int c = 1; c < d; ++c) {
      if (counts[c] * profile.ratio(0) != counts[0] * profile.ratio(c)) {
        return false;
      }
    }
  }
  return true;
}

bool IsFair(const Clustering& c, const ColorProfile& profile) {
  if (c.num_vertices() != profile.num_vertices()) return false;
  return IsFair(c.Clusters(), profile);
}

bool IsPDivisible(const ClusterList& clusters, const ColorProfile& profile) {
  for (const auto& counts : ColorCounts(clusters, profile)) {
    for (int c = 0; c < profile.num_colors(); ++c) {
      if (counts[c] % profile.ratio(c) != 0) return false;
    }
  }
  return true;
}

bool IsPDivisible(const Clustering& c, const ColorProfile& profile) {
  if (c.num_vertices() != profile.num_vertices()) return false;
  return IsPDivisible(c.Clusters(), profile);
}

Rational CcCost(const WeightedCCInstance& inst, const Clustering& c) {
  if (inst.num_vertices() != c.num_vertices()) {
    throw InputError("instance and clustering sizes differ");
  }
  Rational cost = 0;
  for (Vertex u = 0; u < c.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < c.num_vertices(); ++v) {
      cost += c.Together(u, v) ? inst.w_minus(u, v) : inst.w_plus(u, v);
    }
  }
  return cost;
}

std::vector<std::int64_t> Distances(std::span<const Clustering> inputs,
                                    const Clustering& c) {
  std::vector<std::int64_t> out;
  out.reserve(inputs.size());
  for (const Clustering& input : inputs) out.push_back(Dist(input, c));
  return out;
}

double ConsensusObjective(std::span<const Clustering> inputs,
                          const Clustering& c, int ell) {
  if (ell < 1) throw InputError("ell must be at least 1");
  long double sum = 0;
  for (std::int64_t d : Distances(inputs, c)) {
    sum += std::pow(static_cast<long double>(d), ell);
  }
  if (ell == 1) return static_cast<double>(sum);
  return static_cast<double>(std::pow(sum, 1.0L / ell));
}

std::strong_ordering ComparePowerSums(std::span<const std::int64_t> a,
                                      std::span<const std::int64_t> b,
                                      int ell) {
  using boost::multiprecision::cpp_int;
  const auto power_sum = [ell](std::span<const std::int64_t> values) {
    cpp_int sum = 0;
    for (std::int64_t v : values) {
      sum += boost::multiprecision::pow(cpp_int(v), ell);
    }
    return sum;
  };
  const cpp_int lhs = power_sum(a), rhs = power_sum(b);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace robustfair
