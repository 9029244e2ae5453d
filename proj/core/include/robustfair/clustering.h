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

// Clusterings, color profiles and correlation-clustering instances: the
// vocabulary shared by every fairness routine.

#ifndef ROBUSTFAIR_CLUSTERING_H_
#define ROBUSTFAIR_CLUSTERING_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "robustfair/graph.h"
#include "robustfair/rational.h"

namespace robustfair {

// Mutable working form used inside the algorithms: a list of vertex lists.
using ClusterList = std::vector<std::vector<Vertex>>;

// A partition of 0..n-1. Cluster ids are renumbered 0..w-1 in order of first
// appearance, so equal partitions compare equal.
class Clustering {
 public:
  Clustering() = default;
  // assignment[v] is any non-negative label; throws InputError otherwise.
  explicit Clustering(std::span<const int> assignment);

  // Every vertex in exactly one list; empty lists are ignored.
  static Clustering FromClusters(int num_vertices, const ClusterList& clusters);
  static Clustering Singletons(int num_vertices);
  static Clustering OneCluster(int num_vertices);

  int num_vertices() const { return static_cast<int>(assignment_.size()); }
  int num_clusters() const { return num_clusters_; }
  int cluster_of(Vertex v) const { return assignment_[v]; }
  const std::vector<int>& assignment() const { return assignment_; }
  bool Together(Vertex u, Vertex v) const {
    return assignment_[u] == assignment_[v];
  }

  // Clusters in id order, each sorted ascending.
  ClusterList Clusters() const;
  std::string ToString() const;  // e.g. {{0,1},{2}}

  friend bool operator==(const Clustering& a, const Clustering& b) {
    return a.assignment_ == b.assignment_;
  }
  // Lexicographic on the canonical assignment.
  friend auto operator<=>(const Clustering& a, const Clustering& b) {
    return a.assignment_ <=> b.assignment_;
  }

 private:
  std::vector<int> assignment_;
  int num_clusters_ = 0;
};

// Vertex colors plus the global ratio p_1 : ... : p_d in lowest terms.
class ColorProfile {
 public:
  ColorProfile() = default;
  // Infers the ratio from the counts. num_colors == 0 means max color + 1.
  // Throws InputError on out-of-range colors or an absent color.
  explicit ColorProfile(std::vector<int> colors, int num_colors = 0);
  // Validates the counts against a declared ratio (reduced on the way in).
  ColorProfile(std::vector<int> colors, std::vector<std::int64_t> ratio);

  int num_vertices() const { return static_cast<int>(colors_.size()); }
  int num_colors() const { return static_cast<int>(ratio_.size()); }
  int color(Vertex v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<std::int64_t>& ratio() const { return ratio_; }
  std::int64_t ratio(int c) const { return ratio_[c]; }
  int count(int c) const { return counts_[c]; }
  // count(c) / ratio(c), the same for every color.
  int scale() const { return counts_.empty() ? 0 : counts_[0] / ratio_[0]; }
  bool equal_sizes() const;
  std::string RatioString() const;  // e.g. 5:3:2

 private:
  std::vector<int> colors_;
  std::vector<int> counts_;
  std::vector<std::int64_t> ratio_;
};

// Parses "5:3:2". Throws InputError.
std::vector<std::int64_t> ParseRatio(const std::string& text);

// counts[i][c]: vertices of color c in clusters[i].
std::vector<std::vector<int>> ColorCounts(const ClusterList& clusters,
                                          const ColorProfile& profile);

// Weighted correlation clustering under probability constraints: only w+ is
// stored and w- = 1 - w+, so the constraint holds exactly.
class WeightedCCInstance {
 public:
  WeightedCCInstance() = default;
  explicit WeightedCCInstance(int num_vertices, Rational w_plus = 0);
  // The unweighted instance whose positive edges are the together-pairs.
  static WeightedCCInstance FromClustering(const Clustering& c);

  int num_vertices() const { return n_; }
  const Rational& w_plus(Vertex u, Vertex v) const {
    return w_plus_[Index(u, v)];
  }
  Rational w_minus(Vertex u, Vertex v) const { return 1 - w_plus(u, v); }
  // Throws InputError unless u != v, both in range, and 0 <= w <= 1.
  void SetWPlus(Vertex u, Vertex v, Rational w);

 private:
  std::size_t Index(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<Rational> w_plus_;  // upper triangle, row-major
};

// Unordered pairs together in exactly one of a, b. Throws InputError on a
// universe mismatch.
std::int64_t Dist(const Clustering& a, const Clustering& b);

// Every cluster matches the global ratio exactly.
bool IsFair(const Clustering& c, const ColorProfile& profile);
bool IsFair(const ClusterList& clusters, const ColorProfile& profile);

// Every color count of every cluster is a multiple of that color's ratio.
bool IsPDivisible(const Clustering& c, const ColorProfile& profile);
bool IsPDivisible(const ClusterList& clusters, const ColorProfile& profile);

// Sum of w- over together-pairs plus w+ over separated pairs.
Rational CcCost(const WeightedCCInstance& inst, const Clustering& c);

// dist(inputs[i], c) for every i.
std::vector<std::int64_t> Distances(std::span<const Clustering> inputs,
                                    const Clustering& c);

// (sum_i dist(inputs[i], c)^ell)^(1/ell). Throws InputError if ell < 1.
double ConsensusObjective(std::span<const Clustering> inputs,
                          const Clustering& c, int ell);

// Exact three-way comparison of sum a_i^ell and sum b_i^ell.
std::strong_ordering ComparePowerSums(std::span<const std::int64_t> a,
                                      std::span<const std::int64_t> b,
                                      int ell);

}  // namespace robustfair

#endif  // ROBUSTFAIR_CLUSTERING_H_
