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

// Dual fault-tolerant reachability preservers (2-FTRS): subgraphs H of G such
// that for every preserved pair (s, t) and every set F of at most two edges,
// t is reachable from s in H - F exactly when it is in G - F.

#ifndef ROBUSTFAIR_FTRS_H_
#define ROBUSTFAIR_FTRS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "robustfair/graph.h"

namespace robustfair {

inline constexpr int kFaultBudget = 2;
// Below this many residual pairs the full construction unions single-pair
// preservers instead of running another slack round.
inline constexpr int kSlackThreshold = 4;

// An edge subset of a host graph together with the pairs it preserves.
struct Preserver {
  int num_vertices = 0;
  VertexPairSet pairs;
  std::vector<Edge> edges;  // sorted, unique
  int fault_budget = kFaultBudget;

  DirectedGraph ToGraph() const { return DirectedGraph(num_vertices, edges); }
  std::size_t size() const { return edges.size(); }
};

// Union of the edge sets and of the pair sets. Both must share a host.
Preserver Union(const Preserver& a, const Preserver& b);

// A coupling path that survived the "essential" filter of the single-pair
// construction.
struct EssentialPath {
  int strand = 0;  // strand of the coupling point (0 or 1)
  Vertex target = 0;
  Path path;
};

// Everything the pairwise construction needs to know about one pair.
struct SinglePairStructure {
  VertexPair pair;
  std::optional<StrandDecomposition> strands;  // absent: s == t or unreachable
  std::vector<EssentialPath> essential;        // unique per (strand, target)
  std::vector<EdgeId> edges;                   // host edge ids of H_(s,t)

  bool trivial() const { return !strands.has_value(); }
};

SinglePairStructure AnalyzeSinglePair(const DirectedGraph& g, Vertex s,
                                      Vertex t);

// H_(s,t): both strands plus every essential coupling path. Empty when t is
// unreachable from s.
Preserver BuildSinglePair2Ftrs(const DirectedGraph& g, Vertex s, Vertex t);

struct SubsetFamily {
  int universe_size = 0;
  int k = 1;  // every subset has at least k elements
  std::vector<std::vector<Vertex>> subsets;
};

// Greedy max-coverage for at most ceil(4n/k) rounds (ties to the smallest
// element), stopping once every subset is hit. Returns a sorted set that
// misses fewer than m/10 subsets. Throws InputError if a subset is smaller
// than k or holds an out-of-range element.
std::vector<Vertex> FractionalHittingSet(const SubsetFamily& family);

enum class Direction { kSource, kDestination };

// Pluggable single-source (or single-destination) 2-FTRS: returns host edge
// ids preserving s->v (or v->s) for every v under any two faults.
using SingleSourceFtrs =
    std::function<std::vector<EdgeId>(const DirectedGraph&, Vertex, Direction)>;

// Reference implementation: union of H_(s,v) (or H_(v,s)) over all v. Correct
// but not within the 2^k n edge bound of the dedicated construction.
std::vector<EdgeId> ReferenceSingleSource2Ftrs(const DirectedGraph& g,
                                               Vertex s, Direction direction);

Preserver SingleSource2Ftrs(const DirectedGraph& g, Vertex s,
                            Direction direction);

struct SlackStats {
  int path_prefix_length = 0;  // L
  int family_size = 0;
  int family_min_subset = 0;
  int hitting_set_size = 0;
  int high_frequency_vertices = 0;  // |W|
  int coupling_pool_initial = 0;    // |B| before the frequency loop
  int coupling_pool_final = 0;
  std::size_t h1_edges = 0, h2_edges = 0, h3_edges = 0, h4_edges = 0;
};

struct SlackResult {
  Preserver preserver;    // pairs() == covered
  VertexPairSet covered;  // Q
  SlackStats stats;
};

// Caches per-pair structures and single-source preservers of one host graph
// so that many pair sets over the same graph share work. Not thread-safe;
// use one builder per thread.
class FtrsBuilder {
 public:
  // An empty `single_source` selects the reference construction, served from
  // this builder's pair cache.
  explicit FtrsBuilder(const DirectedGraph& g,
                       SingleSourceFtrs single_source = {}, int threads = 1);

  const DirectedGraph& graph() const { return g_; }

  const SinglePairStructure& SinglePair(Vertex s, Vertex t);
  const std::vector<EdgeId>& SingleSource(Vertex v, Direction direction);

  // Computes the per-pair structures of `pairs` up front, in parallel when
  // the builder was given more than one thread. Output is unaffected.
  void Prefetch(std::span<const VertexPair> pairs);

  // Preserver that is valid for the returned covered set, which holds at
  // least ceil(3|P|/5) of the requested pairs. Throws InputError if `pairs`
  // is empty.
  SlackResult Slack(const VertexPairSet& pairs);

  // Full 2-FTRS(G, P): slack rounds on the uncovered residue while it has at
  // least kSlackThreshold pairs, then single-pair preservers for the rest.
  Preserver Full(const VertexPairSet& pairs);

 private:
  const DirectedGraph& g_;
  SingleSourceFtrs single_source_;
  int threads_;
  std::vector<std::unique_ptr<SinglePairStructure>> pair_cache_;
  std::vector<std::unique_ptr<std::vector<EdgeId>>> source_cache_[2];
};

SlackResult BuildPairwise2FtrsSlack(const DirectedGraph& g,
                                    const VertexPairSet& pairs);
Preserver BuildPairwise2Ftrs(const DirectedGraph& g,
                             const VertexPairSet& pairs);

// ceil(n^(2/3) |P|^(-1/3)), floored at 1: the smallest L with L^3 |P| >= n^2.
int PathPrefixLength(int num_vertices, std::size_t num_pairs);

}  // namespace robustfair

#endif  // ROBUSTFAIR_FTRS_H_
