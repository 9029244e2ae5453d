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

// Directed graphs, reachability under edge faults, and the two-strand
// decomposition used by the fault-tolerant preserver constructions.

#ifndef ROBUSTFAIR_GRAPH_H_
#define ROBUSTFAIR_GRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace robustfair {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct VertexPair {
  Vertex s = 0;
  Vertex t = 0;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Sorted, duplicate-free set of (s, t) pairs.
class VertexPairSet {
 public:
  VertexPairSet() = default;
  explicit VertexPairSet(std::vector<VertexPair> pairs);

  const std::vector<VertexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(VertexPair p) const;
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  friend bool operator==(const VertexPairSet&, const VertexPairSet&) = default;

 private:
  std::vector<VertexPair> pairs_;
};

// Immutable simple digraph on vertices 0..n-1. Edge ids follow the sorted
// order of the edge list, so two graphs with the same edge set have the same
// ids.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  // Throws InputError on out-of-range endpoints or duplicate edges.
  DirectedGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  // Out/in neighbours as edge ids, ordered by the opposite endpoint.
  std::span<const EdgeId> out_edges(Vertex v) const;
  std::span<const EdgeId> in_edges(Vertex v) const;

  std::optional<EdgeId> FindEdge(Vertex tail, Vertex head) const;
  bool HasEdge(Vertex tail, Vertex head) const {
    return FindEdge(tail, head).has_value();
  }
  bool ContainsVertex(Vertex v) const { return v >= 0 && v < n_; }

  // The subgraph on the same vertex set keeping only `keep` (ids of this
  // graph).
  DirectedGraph Subgraph(std::span<const EdgeId> keep) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> out_offset_, in_offset_;
  std::vector<EdgeId> out_ids_, in_ids_;
};

// A walk through the host graph stored as its vertex sequence. A single
// vertex is the empty path.
struct Path {
  std::vector<Vertex> vertices;

  bool empty() const { return vertices.size() <= 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::size_t num_edges() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  std::vector<Edge> edges() const;

  friend bool operator==(const Path&, const Path&) = default;
};

// Two s->t paths that share edges only on s-t bridges.
struct StrandDecomposition {
  VertexPair pair;
  Path strand1;
  Path strand2;

  const Path& strand(int i) const { return i == 0 ? strand1 : strand2; }
};

// Earliest coupling point of a strand vertex on one strand, with its witness.
struct CouplingPoint {
  Vertex vertex = 0;
  int position = 0;  // index of `vertex` along the strand
  Path path;         // vertex -> target, strand-edge-disjoint
};

struct CouplingPoints {
  std::optional<CouplingPoint> on_strand1;
  std::optional<CouplingPoint> on_strand2;

  const std::optional<CouplingPoint>& on(int i) const {
    return i == 0 ? on_strand1 : on_strand2;
  }
};

// True iff t is reachable from s once `faults` are removed. Fault edges that
// are not in `g` are ignored. Throws InputError on out-of-range ids.
bool Reachable(const DirectedGraph& g, Vertex s, Vertex t,
               std::span<const Edge> faults = {});

// Same, with faults given as a per-edge-id mask of g.
bool Reachable(const DirectedGraph& g, Vertex s, Vertex t,
               const std::vector<bool>& fault_mask);

// Two maximally edge-disjoint s->t strands, or nullopt if t is unreachable.
// Deterministic: augmenting paths and the flow decomposition both prefer the
// smallest vertex id.
std::optional<StrandDecomposition> TwoMaximallyDisjointPaths(
    const DirectedGraph& g, Vertex s, Vertex t);

// Coupling points of `v` on both strands. Throws InputError if v is on
// neither strand.
CouplingPoints EarliestCouplingPoints(const DirectedGraph& g,
                                      const StrandDecomposition& strands,
                                      Vertex v);

// Coupling points of every vertex of both strands, indexed by vertex id
// (entries for off-strand vertices are empty). One incremental search per
// strand.
std::vector<CouplingPoints> AllCouplingPoints(
    const DirectedGraph& g, const StrandDecomposition& strands);

}  // namespace robustfair

#endif  // ROBUSTFAIR_GRAPH_H_
