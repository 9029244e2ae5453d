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

#include "robustfair/ftrs.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "parallel.h"
#include "robustfair/errors.h"

namespace robustfair {
namespace {

void AddPathEdges(const DirectedGraph& g, const Path& path,
                  std::vector<bool>& mask) {
  for (const Edge& e : path.edges()) mask[*g.FindEdge(e.tail, e.head)] = true;
}

std::vector<EdgeId> MaskToIds(const std::vector<bool>& mask) {
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < static_cast<EdgeId>(mask.size()); ++id) {
    if (mask[id]) ids.push_back(id);
  }
  return ids;
}

Preserver MakePreserver(const DirectedGraph& g, const std::vector<bool>& mask,
                        VertexPairSet pairs) {
  Preserver h;
  h.num_vertices = g.num_vertices();
  h.pairs = std::move(pairs);
  for (EdgeId id : MaskToIds(mask)) h.edges.push_back(g.edge(id));
  return h;
}

void CheckPairs(const DirectedGraph& g, const VertexPairSet& pairs) {
  for (const VertexPair& p : pairs) {
    if (!g.ContainsVertex(p.s) || !g.ContainsVertex(p.t)) {
      std::ostringstream msg;
      msg << "pair (" << p.s << "," << p.t << ") out of range for n="
          << g.num_vertices();
      throw InputError(msg.str());
    }
  }
}

// First (or last) min(L, |P|) vertices of a strand.
std::span<const Vertex> Prefix(const Path& p, int length) {
  const std::size_t len = std::min<std::size_t>(length, p.vertices.size());
  return {p.vertices.data(), len};
}
std::span<const Vertex> Suffix(const Path& p, int length) {
  const std::size_t len = std::min<std::size_t>(length, p.vertices.size());
  return {p.vertices.data() + p.vertices.size() - len, len};
}

}  // namespace

Preserver Union(const Preserver& a, const Preserver& b) {
  if (a.num_vertices != b.num_vertices) {
    throw InputError("preserver union over different hosts");
  }
  Preserver out;
  out.num_vertices = a.num_vertices;
  out.fault_budget = std::min(a.fault_budget, b.fault_budget);
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(),
                 b.edges.end(), std::back_inserter(out.edges));
  std::vector<VertexPair> pairs = a.pairs.pairs();
  pairs.insert(pairs.end(), b.pairs.begin(), b.pairs.end());
  out.pairs = VertexPairSet(std::move(pairs));
  return out;
}

SinglePairStructure AnalyzeSinglePair(const DirectedGraph& g, Vertex s,
                                      Vertex t) {
  SinglePairStructure out;
  out.pair = {s, t};
  if (s == t) return out;
  out.strands = TwoMaximallyDisjointPaths(g, s, t);
  if (!out.strands) return out;

  const StrandDecomposition& strands = *out.strands;
  const std::vector<CouplingPoints> coupling = AllCouplingPoints(g, strands);
  std::vector<bool> mask(g.num_edges(), false);
  AddPathEdges(g, strands.strand1, mask);
  AddPathEdges(g, strands.strand2, mask);

  // Q^i_v is kept iff every vertex after v on v's strand couples to strand i
  // strictly later than v does (missing coupling points count as infinitely
  // late).
  const int n = g.num_vertices();
  std::vector<bool> chosen(2 * n, false);
  for (int j = 0; j < 2; ++j) {
    const std::vector<Vertex>& strand = strands.strand(j).vertices;
    for (int i = 0; i < 2; ++i) {
      int earliest_after = static_cast<int>(g.num_vertices()) + 1;
      for (int idx = static_cast<int>(strand.size()) - 1; idx >= 0; --idx) {
        const Vertex v = strand[idx];
        const auto& cp = coupling[v].on(i);
        if (!cp) continue;
        if (cp->position < earliest_after && !chosen[i * n + v]) {
          chosen[i * n + v] = true;
          out.essential.push_back({i, v, cp->path});
          AddPathEdges(g, cp->path, mask);
        }
        earliest_after = std::min(earliest_after, cp->position);
      }
    }
  }
  out.edges = MaskToIds(mask);
  return out;
}

Preserver BuildSinglePair2Ftrs(const DirectedGraph& g, Vertex s, Vertex t) {
  if (!g.ContainsVertex(s) || !g.ContainsVertex(t)) {
    throw InputError("pair endpoint out of range");
  }
  const SinglePairStructure st = AnalyzeSinglePair(g, s, t);
  std::vector<bool> mask(g.num_edges(), false);
  for (EdgeId id : st.edges) mask[id] = true;
  return MakePreserver(g, mask, VertexPairSet({{s, t}}));
}

std::vector<Vertex> FractionalHittingSet(const SubsetFamily& family) {
  const int n = family.universe_size;
  if (family.k < 1) throw InputError("hitting set parameter k must be >= 1");
  std::vector<std::vector<Vertex>> subsets = family.subsets;
  std::vector<std::vector<int>> containing(n);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    auto& sub = subsets[i];
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (static_cast<int>(sub.size()) < family.k) {
      throw InputError("subset smaller than k");
    }
    for (Vertex v : sub) {
      if (v < 0 || v >= n) throw InputError("subset element out of range");
      containing[v].push_back(static_cast<int>(i));
    }
  }

  std::vector<int> count(n);
  for (int v = 0; v < n; ++v) count[v] = static_cast<int>(containing[v].size());
  std::vector<bool> alive(subsets.size(), true);
  std::vector<Vertex> chosen;
  const long long rounds = (4LL * n + family.k - 1) / family.k;
  for (long long r = 0; r < rounds; ++r) {
    const auto best = std::max_element(count.begin(), count.end());
    if (best == count.end() || *best == 0) break;
    const Vertex v = static_cast<Vertex>(best - count.begin());
    chosen.push_back(v);
    for (int i : containing[v]) {
      if (!alive[i]) continue;
      alive[i] = false;
      for (Vertex w : subsets[i]) --count[w];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<EdgeId> ReferenceSingleSource2Ftrs(const DirectedGraph& g,
                                               Vertex s, Direction direction) {
  std::vector<bool> mask(g.num_edges(), false);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const SinglePairStructure st = direction == Direction::kSource
                                       ? AnalyzeSinglePair(g, s, v)
                                       : AnalyzeSinglePair(g, v, s);
    for (EdgeId id : st.edges) mask[id] = true;
  }
  return MaskToIds(mask);
}

Preserver SingleSource2Ftrs(const DirectedGraph& g, Vertex s,
                            Direction direction) {
  if (!g.ContainsVertex(s)) throw InputError("source out of range");
  std::vector<bool> mask(g.num_edges(), false);
  for (EdgeId id : ReferenceSingleSource2Ftrs(g, s, direction)) mask[id] = true;
  std::vector<VertexPair> pairs;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    pairs.push_back(direction == Direction::kSource ? VertexPair{s, v}
                                                    : VertexPair{v, s});
  }
  return MakePreserver(g, mask, VertexPairSet(std::move(pairs)));
}

int PathPrefixLength(int num_vertices, std::size_t num_pairs) {
  if (num_pairs == 0) return 1;
  const long double n2 =
      static_cast<long double>(num_vertices) * num_vertices;
  long long length = 1;
  while (static_cast<long double>(length) * length * length * num_pairs < n2) {
    ++length;
  }
  return static_cast<int>(length);
}

FtrsBuilder::FtrsBuilder(const DirectedGraph& g, SingleSourceFtrs single_source,
                         int threads)
    : g_(g),
      single_source_(std::move(single_source)),
      threads_(std::max(1, threads)) {
  const std::size_t n = g.num_vertices();
  pair_cache_.resize(n * n);
  source_cache_[0].resize(n);
  source_cache_[1].resize(n);
}

const SinglePairStructure& FtrsBuilder::SinglePair(Vertex s, Vertex t) {
  if (!g_.ContainsVertex(s) || !g_.ContainsVertex(t)) {
    throw InputError("pair endpoint out of range");
  }
  auto& slot =
      pair_cache_[static_cast<std::size_t>(s) * g_.num_vertices() + t];
  if (!slot) {
    slot = std::make_unique<SinglePairStructure>(AnalyzeSinglePair(g_, s, t));
  }
  return *slot;
}

const std::vector<EdgeId>& FtrsBuilder::SingleSource(Vertex v,
                                                     Direction direction) {
  auto& slot = source_cache_[direction == Direction::kSource ? 0 : 1][v];
  if (slot) return *slot;
  std::vector<EdgeId> ids;
  if (single_source_) {
    ids = single_source_(g_, v, direction);
  } else {
    std::vector<bool> mask(g_.num_edges(), false);
    std::vector<VertexPair> pairs;
    for (Vertex w = 0; w < g_.num_vertices(); ++w) {
      pairs.push_back(direction == Direction::kSource ? VertexPair{v, w}
                                                      : VertexPair{w, v});
    }
    Prefetch(pairs);
    for (const VertexPair& p : pairs) {
      for (EdgeId id : SinglePair(p.s, p.t).edges) mask[id] = true;
    }
    ids = MaskToIds(mask);
  }
  slot = std::make_unique<std::vector<EdgeId>>(std::move(ids));
  return *slot;
}

void FtrsBuilder::Prefetch(std::span<const VertexPair> pairs) {
  const int n = g_.num_vertices();
  std::vector<VertexPair> missing;
  for (const VertexPair& p : pairs) {
    if (!g_.ContainsVertex(p.s) || !g_.ContainsVertex(p.t)) {
      throw InputError("pair endpoint out of range");
    }
    if (!pair_cache_[static_cast<std::size_t>(p.s) * n + p.t]) {
      missing.push_back(p);
    }
  }
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  if (threads_ <= 1 || missing.size() < 2) {
    for (const VertexPair& p : missing) SinglePair(p.s, p.t);
    return;
  }
  std::vector<SinglePairStructure> results(missing.size());
  internal::ParallelFor(static_cast<int>(missing.size()), threads_, [&](int i) {
    results[i] = AnalyzeSinglePair(g_, missing[i].s, missing[i].t);
  });
  for (std::size_t i = 0; i < missing.size(); ++i) {
    pair_cache_[static_cast<std::size_t>(missing[i].s) * n + missing[i].t] =
        std::make_unique<SinglePairStructure>(std::move(results[i]));
  }
}

SlackResult FtrsBuilder::Slack(const VertexPairSet& pairs) {
  if (pairs.empty()) throw InputError("slack construction needs a pair");
  CheckPairs(g_, pairs);
  const int n = g_.num_vertices();
  const int length = PathPrefixLength(n, pairs.size());
  Prefetch(pairs.pairs());

  SlackResult result;
  SlackStats& stats = result.stats;
  stats.path_prefix_length = length;

  // Step 1-2: strand prefixes/suffixes and their fractional hitting set.
  // Pairs without strands (s == t, or unreachable) are preserved by any
  // subgraph and are covered outright.
  std::vector<const SinglePairStructure*> structures;
  SubsetFamily family;
  family.universe_size = n;
  family.k = n;
  for (const VertexPair& p : pairs) {
    const SinglePairStructure& st = SinglePair(p.s, p.t);
    structures.push_back(&st);
    if (st.trivial()) continue;
    for (int i = 0; i < 2; ++i) {
      const Path& strand = st.strands->strand(i);
      for (auto part : {Prefix(strand, length), Suffix(strand, length)}) {
        family.subsets.emplace_back(part.begin(), part.end());
        family.k = std::min<int>(family.k, static_cast<int>(part.size()));
      }
    }
  }
  if (family.subsets.empty()) family.k = 1;
  stats.family_size = static_cast<int>(family.subsets.size());
  stats.family_min_subset = family.k;
  const std::vector<Vertex> hitting = FractionalHittingSet(family);
  stats.hitting_set_size = static_cast<int>(hitting.size());
  std::vector<bool> in_hitting(n, false);
  for (Vertex v : hitting) in_hitting[v] = true;
  auto hit = [&](std::span<const Vertex> part) {
    return std::any_of(part.begin(), part.end(),
                       [&](Vertex v) { return in_hitting[v]; });
  };

  std::vector<VertexPair> covered;
  std::vector<const SinglePairStructure*> covered_nontrivial;
  for (const SinglePairStructure* st : structures) {
    if (st->trivial()) {
      covered.push_back(st->pair);
      continue;
    }
    bool all_hit = true;
    for (int i = 0; i < 2; ++i) {
      const Path& strand = st->strands->strand(i);
      all_hit = all_hit && hit(Prefix(strand, length)) &&
                hit(Suffix(strand, length));
    }
    if (all_hit) {
      covered.push_back(st->pair);
      covered_nontrivial.push_back(st);
    }
  }
  result.covered = VertexPairSet(covered);
  const long long q = static_cast<long long>(result.covered.size());

  // Step 3: H1, in- and out-preservers of every hitting-set vertex.
  std::vector<bool> h1(g_.num_edges(), false);
  for (Vertex v : hitting) {
    for (Direction d : {Direction::kSource, Direction::kDestination}) {
      for (EdgeId id : SingleSource(v, d)) h1[id] = true;
    }
  }

  // Step 4: H2, strand prefixes and suffixes of the covered pairs.
  std::vector<bool> h2(g_.num_edges(), false);
  for (const SinglePairStructure* st : covered_nontrivial) {
    for (int i = 0; i < 2; ++i) {
      const Path& strand = st->strands->strand(i);
      AddPathEdges(g_, Path{{Prefix(strand, length).begin(),
                             Prefix(strand, length).end()}},
                   h2);
      AddPathEdges(g_, Path{{Suffix(strand, length).begin(),
                             Suffix(strand, length).end()}},
                   h2);
    }
  }

  // Step 5: coupling-path pool B, essential paths ending in a suffix.
  std::vector<const Path*> pool;
  for (const SinglePairStructure* st : covered_nontrivial) {
    std::vector<bool> in_suffix(n, false);
    for (int j = 0; j < 2; ++j) {
      for (Vertex v : Suffix(st->strands->strand(j), length)) {
        in_suffix[v] = true;
      }
    }
    for (const EssentialPath& ep : st->essential) {
      if (!ep.path.empty() && in_suffix[ep.target]) pool.push_back(&ep.path);
    }
  }
  stats.coupling_pool_initial = static_cast<int>(pool.size());

  // Steps 6-7: peel off vertices with freq_B(v) >= sqrt(L |Q|), most
  // frequent first, ties to the smallest id.
  std::vector<std::vector<int>> paths_through(n);
  std::vector<int> freq(n, 0);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    std::vector<Vertex> verts = pool[i]->vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (Vertex v : verts) {
      paths_through[v].push_back(static_cast<int>(i));
      ++freq[v];
    }
  }
  const long long threshold_sq = static_cast<long long>(length) * q;
  std::vector<bool> pool_alive(pool.size(), true);
  std::vector<Vertex> heavy;
  for (;;) {
    const auto best = std::max_element(freq.begin(), freq.end());
    if (best == freq.end()) break;
    const long long f = *best;
    if (f == 0 || f * f < threshold_sq) break;
    const Vertex v = static_cast<Vertex>(best - freq.begin());
    heavy.push_back(v);
    for (int i : paths_through[v]) {
      if (!pool_alive[i]) continue;
      pool_alive[i] = false;
      std::vector<Vertex> verts = pool[i]->vertices;
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      for (Vertex w : verts) --freq[w];
    }
  }
  stats.high_frequency_vertices = static_cast<int>(heavy.size());

  // Step 8: H3, preservers of the heavy vertices.
  std::vector<bool> h3(g_.num_edges(), false);
  for (Vertex w : heavy) {
    for (Direction d : {Direction::kSource, Direction::kDestination}) {
      for (EdgeId id : SingleSource(w, d)) h3[id] = true;
    }
  }

  // Step 9: H4, the surviving pool.
  std::vector<bool> h4(g_.num_edges(), false);
  int surviving = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!pool_alive[i]) continue;
    ++surviving;
    AddPathEdges(g_, *pool[i], h4);
  }
  stats.coupling_pool_final = surviving;

  std::vector<bool> all(g_.num_edges(), false);
  for (int e = 0; e < g_.num_edges(); ++e) {
    stats.h1_edges += h1[e];
    stats.h2_edges += h2[e];
    stats.h3_edges += h3[e];
    stats.h4_edges += h4[e];
    all[e] = h1[e] || h2[e] || h3[e] || h4[e];
  }
  result.preserver = MakePreserver(g_, all, result.covered);
  return result;
}

Preserver FtrsBuilder::Full(const VertexPairSet& pairs) {
  CheckPairs(g_, pairs);
  std::vector<bool> mask(g_.num_edges(), false);
  std::vector<VertexPair> residue = pairs.pairs();
  while (static_cast<int>(residue.size()) >= kSlackThreshold) {
    const SlackResult round = Slack(VertexPairSet(residue));
    for (const Edge& e : round.preserver.edges) {
      mask[*g_.FindEdge(e.tail, e.head)] = true;
    }
    std::erase_if(residue, [&](const VertexPair& p) {
      return round.covered.contains(p);
    });
  }
  Prefetch(residue);
  for (const VertexPair& p : residue) {
    for (EdgeId id : SinglePair(p.s, p.t).edges) mask[id] = true;
  }
  return MakePreserver(g_, mask, pairs);
}

SlackResult BuildPairwise2FtrsSlack(const DirectedGraph& g,
                                    const VertexPairSet& pairs) {
  FtrsBuilder builder(g);
  return builder.Slack(pairs);
}

Preserver BuildPairwise2Ftrs(const DirectedGraph& g,
                             const VertexPairSet& pairs) {
  FtrsBuilder builder(g);
  return builder.Full(pairs);
}

}  // namespace robustfair
