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

#include "robustfair/graph.h"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string>

#include "robustfair/errors.h"

namespace robustfair {
namespace {

void CheckVertex(const DirectedGraph& g, Vertex v) {
  if (!g.ContainsVertex(v)) {
    std::ostringstream msg;
    msg << "vertex " << v << " out of range [0, " << g.num_vertices() << ")";
    throw InputError(msg.str());
  }
}

// Breadth-first search over non-masked edges. Returns the parent edge of every
// reached vertex (-1 for the root, -2 for unreached).
std::vector<EdgeId> SearchTree(const DirectedGraph& g, Vertex s,
                               const std::vector<bool>& blocked) {
  std::vector<EdgeId> parent(g.num_vertices(), -2);
  std::deque<Vertex> queue = {s};
  parent[s] = -1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(u)) {
      if (!blocked.empty() && blocked[e]) continue;
      const Vertex w = g.edge(e).head;
      if (parent[w] != -2) continue;
      parent[w] = e;
      queue.push_back(w);
    }
  }
  return parent;
}

Path TracePath(const DirectedGraph& g, const std::vector<EdgeId>& parent,
               Vertex target) {
  Path path;
  for (Vertex x = target;;) {
    path.vertices.push_back(x);
    const EdgeId e = parent[x];
    if (e < 0) break;
    x = g.edge(e).tail;
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

// Residual search for one augmenting path. Forward arcs are explored before
// backward arcs, each in increasing neighbour order.
bool Augment(const DirectedGraph& g, Vertex s, Vertex t,
             const std::vector<int>& capacity, std::vector<int>& flow) {
  const int n = g.num_vertices();
  // Parent arc encoding: edge id for forward arcs, ~edge id for backward.
  std::vector<EdgeId> via(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue = {s};
  seen[s] = true;
  while (!queue.empty() && !seen[t]) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(u)) {
      const Vertex w = g.edge(e).head;
      if (seen[w] || flow[e] >= capacity[e]) continue;
      seen[w] = true;
      via[w] = e;
      queue.push_back(w);
    }
    for (EdgeId e : g.in_edges(u)) {
      const Vertex w = g.edge(e).tail;
      if (seen[w] || flow[e] <= 0) continue;
      seen[w] = true;
      via[w] = ~e;
      queue.push_back(w);
    }
  }
  if (!seen[t]) return false;
  for (Vertex x = t; x != s;) {
    const EdgeId arc = via[x];
    if (arc >= 0) {
      ++flow[arc];
      x = g.edge(arc).tail;
    } else {
      --flow[~arc];
      x = g.edge(~arc).head;
    }
  }
  return true;
}

// Peels one s->t path off an integral flow, cancelling any cycles met on
// the way. Consumes one unit along the returned path.
Path PeelPath(const DirectedGraph& g, Vertex s, Vertex t,
              std::vector<int>& flow) {
  std::vector<Vertex> walk = {s};
  std::vector<EdgeId> walk_edges;
  std::vector<int> position(g.num_vertices(), -1);
  position[s] = 0;
  while (walk.back() != t) {
    const Vertex u = walk.back();
    EdgeId next = -1;
    for (EdgeId e : g.out_edges(u)) {
      if (flow[e] > 0) {
        next = e;
        break;
      }
    }
    if (next < 0) throw std::logic_error("flow conservation violated");
    const Vertex w = g.edge(next).head;
    if (position[w] >= 0) {
      // Cycle walk[position[w]..] -> w: cancel it.
      --flow[next];
      while (walk.back() != w) {
        --flow[walk_edges.back()];
        position[walk.back()] = -1;
        walk.pop_back();
        walk_edges.pop_back();
      }
      continue;
    }
    position[w] = static_cast<int>(walk.size());
    walk.push_back(w);
    walk_edges.push_back(next);
  }
  for (EdgeId e : walk_edges) --flow[e];
  return Path{std::move(walk)};
}

}  // namespace

VertexPairSet::VertexPairSet(std::vector<VertexPair> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool VertexPairSet::contains(VertexPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

DirectedGraph::DirectedGraph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_) {
      std::ostringstream msg;
      msg << "edge (" << e.tail << "," << e.head << ") out of range for n="
          << n_;
      throw InputError(msg.str());
    }
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    std::ostringstream msg;
    msg << "duplicate edge (" << dup->tail << "," << dup->head << ")";
    throw InputError(msg.str());
  }

  const int m = num_edges();
  out_offset_.assign(n_ + 1, 0);
  in_offset_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offset_[e.tail + 1];
    ++in_offset_[e.head + 1];
  }
  for (int v = 0; v < n_; ++v) {
    out_offset_[v + 1] += out_offset_[v];
    in_offset_[v + 1] += in_offset_[v];
  }
  // Edges are sorted by (tail, head), so out lists come out head-ordered and
  // in lists tail-ordered.
  out_ids_.resize(m);
  in_ids_.resize(m);
  std::vector<int> out_fill(out_offset_.begin(), out_offset_.end() - 1);
  std::vector<int> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  for (EdgeId id = 0; id < m; ++id) {
    out_ids_[out_fill[edges_[id].tail]++] = id;
    in_ids_[in_fill[edges_[id].head]++] = id;
  }
}

std::span<const EdgeId> DirectedGraph::out_edges(Vertex v) const {
  return {out_ids_.data() + out_offset_[v],
          static_cast<std::size_t>(out_offset_[v + 1] - out_offset_[v])};
}

std::span<const EdgeId> DirectedGraph::in_edges(Vertex v) const {
  return {in_ids_.data() + in_offset_[v],
          static_cast<std::size_t>(in_offset_[v + 1] - in_offset_[v])};
}

std::optional<EdgeId> DirectedGraph::FindEdge(Vertex tail, Vertex head) const {
  const Edge key{tail, head};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

DirectedGraph DirectedGraph::Subgraph(std::span<const EdgeId> keep) const {
  std::vector<EdgeId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Edge> kept;
  kept.reserve(ids.size());
  for (EdgeId id : ids) kept.push_back(edges_[id]);
  return DirectedGraph(n_, std::move(kept));
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    out.push_back({vertices[i], vertices[i + 1]});
  }
  return out;
}

bool Reachable(const DirectedGraph& g, Vertex s, Vertex t,
               std::span<const Edge> faults) {
  CheckVertex(g, s);
  CheckVertex(g, t);
  std::vector<bool> mask(g.num_edges(), false);
  for (const Edge& f : faults) {
    if (auto id = g.FindEdge(f.tail, f.head)) mask[*id] = true;
  }
  return Reachable(g, s, t, mask);
}

bool Reachable(const DirectedGraph& g, Vertex s, Vertex t,
               const std::vector<bool>& fault_mask) {
  CheckVertex(g, s);
  CheckVertex(g, t);
  if (s == t) return true;
  return SearchTree(g, s, fault_mask)[t] != -2;
}

std::optional<StrandDecomposition> TwoMaximallyDisjointPaths(
    const DirectedGraph& g, Vertex s, Vertex t) {
  CheckVertex(g, s);
  CheckVertex(g, t);
  if (s == t) return StrandDecomposition{{s, t}, Path{{s}}, Path{{s}}};
  const std::vector<EdgeId> tree = SearchTree(g, s, {});
  if (tree[t] == -2) return std::nullopt;

  // Every s-t bridge lies on any single s-t path, so only the edges of the
  // search-tree path need the deletion test. Bridges get capacity 2, which
  // makes a flow of value 2 exist and lets both strands run through them.
  std::vector<int> capacity(g.num_edges(), 1);
  std::vector<bool> mask(g.num_edges(), false);
  for (const Edge& e : TracePath(g, tree, t).edges()) {
    const EdgeId id = *g.FindEdge(e.tail, e.head);
    mask[id] = true;
    if (!Reachable(g, s, t, mask)) capacity[id] = 2;
    mask[id] = false;
  }

  std::vector<int> flow(g.num_edges(), 0);
  for (int unit = 0; unit < 2; ++unit) {
    if (!Augment(g, s, t, capacity, flow)) {
      throw std::logic_error("bridge-augmented flow below 2");
    }
  }
  StrandDecomposition result;
  result.pair = {s, t};
  result.strand1 = PeelPath(g, s, t, flow);
  result.strand2 = PeelPath(g, s, t, flow);
  return result;
}

std::vector<CouplingPoints> AllCouplingPoints(
    const DirectedGraph& g, const StrandDecomposition& strands) {
  const int n = g.num_vertices();
  std::vector<bool> strand_edge(g.num_edges(), false);
  std::vector<bool> on_strand(n, false);
  for (int i = 0; i < 2; ++i) {
    for (const Edge& e : strands.strand(i).edges()) {
      strand_edge[*g.FindEdge(e.tail, e.head)] = true;
    }
    for (Vertex v : strands.strand(i).vertices) on_strand[v] = true;
  }

  std::vector<CouplingPoints> result(n);
  for (int i = 0; i < 2; ++i) {
    // Anything reachable from an already-visited vertex was reachable from
    // an earlier source, so one shared visited set suffices.
    std::vector<EdgeId> parent(n, -2);
    const std::vector<Vertex>& strand = strands.strand(i).vertices;
    for (int pos = 0; pos < static_cast<int>(strand.size()); ++pos) {
      const Vertex u = strand[pos];
      if (parent[u] != -2) continue;
      parent[u] = -1;
      std::deque<Vertex> queue = {u};
      while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        if (on_strand[x]) {
          CouplingPoint cp{u, pos, TracePath(g, parent, x)};
          (i == 0 ? result[x].on_strand1 : result[x].on_strand2) =
              std::move(cp);
        }
        for (EdgeId e : g.out_edges(x)) {
          if (strand_edge[e]) continue;
          const Vertex w = g.edge(e).head;
          if (parent[w] != -2) continue;
          parent[w] = e;
          queue.push_back(w);
        }
      }
    }
  }
  return result;
}

CouplingPoints EarliestCouplingPoints(const DirectedGraph& g,
                                      const StrandDecomposition& strands,
                                      Vertex v) {
  CheckVertex(g, v);
  const auto& a = strands.strand1.vertices;
  const auto& b = strands.strand2.vertices;
  if (std::find(a.begin(), a.end(), v) == a.end() &&
      std::find(b.begin(), b.end(), v) == b.end()) {
    std::ostringstream msg;
    msg << "vertex " << v << " is not on either strand";
    throw InputError(msg.str());
  }
  return AllCouplingPoints(g, strands)[v];
}

}  // namespace robustfair
