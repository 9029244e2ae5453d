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

#include "robustfair/streaming.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "parallel.h"
#include "robustfair/errors.h"

namespace robustfair {
namespace {

std::uint64_t Mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t PairHash(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return Mix((static_cast<std::uint64_t>(u) << 32) |
             static_cast<std::uint32_t>(v));
}

std::string PairName(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<int> Draw(int m, int draws, std::mt19937_64& rng) {
  std::vector<int> out;
  if (draws >= m) {
    out.resize(m);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int i = 0; i < draws; ++i) out.push_back(pick(rng));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int DrawCount(double value) {
  const double c = std::ceil(value - 1e-9);
  if (c >= static_cast<double>(std::numeric_limits<int>::max())) {
    return std::numeric_limits<int>::max();
  }
  return std::max(1, static_cast<int>(c));
}

}  // namespace

SampledIndices SampleIndices(int m, double g, double eps, std::uint64_t seed) {
  if (m < 1) throw InputError("need at least one clustering");
  if (!(g > 1)) throw InputError("g must exceed 1");
  if (!(eps > 0 && eps <= 1)) throw InputError("eps must lie in (0, 1]");
  const double log_m = std::log(static_cast<double>(m));
  SampledIndices out;
  out.j_draws = DrawCount(4 * g * log_m);
  out.k_draws = DrawCount(64 * log_m / (eps * eps));
  std::mt19937_64 rng(seed);
  out.j = Draw(m, out.j_draws, rng);
  out.k = Draw(m, out.k_draws, rng);
  return out;
}

IndexSketch::IndexSketch(int num_vertices)
    : n_(num_vertices), parent_(num_vertices) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

Vertex IndexSketch::Find(Vertex v) const {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

void IndexSketch::Add(Vertex u, Vertex v, int bit) {
  const Vertex ru = Find(u), rv = Find(v);
  if (bit == 0) {
    if (ru == rv) return;  // implied by earlier records
    parent_[std::max(ru, rv)] = std::min(ru, rv);
    unions_.emplace_back(u, v);
    return;
  }
  if (ru == rv) {
    throw MalformedStreamError("pair " + PairName(u, v) +
                               " is marked separated but is already joined");
  }
  ++separated_count_;
  separated_hash_ += PairHash(u, v);
}

Clustering IndexSketch::Reconstruct() const {
  std::vector<int> label(n_);
  for (Vertex v = 0; v < n_; ++v) label[v] = Find(v);
  const Clustering c(label);

  std::vector<std::uint64_t> sizes(c.num_clusters(), 0);
  for (Vertex v = 0; v < n_; ++v) ++sizes[c.cluster_of(v)];
  std::uint64_t cross = static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
  for (std::uint64_t s : sizes) cross -= s * (s - 1) / 2;
  if (separated_count_ > cross) {
    throw MalformedStreamError(
        "more separated records than separated pairs (duplicate or "
        "contradicting records)");
  }
  if (separated_count_ == cross) {
    std::uint64_t hash = 0;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!c.Together(u, v)) hash += PairHash(u, v);
      }
    }
    if (hash != separated_hash_) {
      throw MalformedStreamError(
          "separated records do not match the reconstructed partition");
    }
  }
  return c;
}

Clustering ReconstructClustering(std::span<const StreamTriple> records,
                                 int num_vertices) {
  IndexSketch sketch(num_vertices);
  for (const StreamTriple& t : records) {
    if (t.u < 0 || t.v < 0 || t.u >= num_vertices || t.v >= num_vertices ||
        t.u == t.v || (t.bit != 0 && t.bit != 1)) {
      throw MalformedStreamError("bad record " + PairName(t.u, t.v));
    }
    sketch.Add(t.u, t.v, t.bit);
  }
  return sketch.Reconstruct();
}

SampledStore::SampledStore(int num_vertices, int num_indices,
                           std::vector<int> sampled)
    : n_(num_vertices), m_(num_indices), slot_(num_indices, -1) {
  std::sort(sampled.begin(), sampled.end());
  sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());
  for (int j : sampled) {
    if (j < 0 || j >= m_) throw InputError("sampled index out of range");
    slot_[j] = static_cast<int>(sketches_.size());
    sketches_.emplace_back(n_);
  }
  sampled_ = std::move(sampled);
}

bool SampledStore::Ingest(const StreamTriple& t) {
  ++seen_;
  if (t.u < 0 || t.v < 0 || t.u >= n_ || t.v >= n_ || t.u == t.v ||
      t.index < 0 || t.index >= m_ || (t.bit != 0 && t.bit != 1)) {
    std::ostringstream msg;
    msg << "bad triple " << t.u << ' ' << t.v << ' ' << t.index << ' '
        << t.bit;
    throw MalformedStreamError(msg.str());
  }
  const int slot = slot_[t.index];
  if (slot < 0) return false;
  IndexSketch& sketch = sketches_[slot];
  const std::size_t before = sketch.stored_records();
  try {
    sketch.Add(t.u, t.v, t.bit);
  } catch (const MalformedStreamError& e) {
    throw MalformedStreamError("clustering " + std::to_string(t.index) + ": " +
                               e.what());
  }
  stored_ += sketch.stored_records() - before;
  peak_ = std::max(peak_, stored_);
  return true;
}

Clustering SampledStore::Reconstruct(int index) const {
  if (index < 0 || index >= m_ || slot_[index] < 0) {
    throw InputError("index " + std::to_string(index) + " was not sampled");
  }
  try {
    return sketches_[slot_[index]].Reconstruct();
  } catch (const MalformedStreamError& e) {
    throw MalformedStreamError("clustering " + std::to_string(index) + ": " +
                               e.what());
  }
}

WeightedCCInstance MajorityInstance(const Clustering& x, const Clustering& y,
                                    const Clustering& z) {
  const int n = x.num_vertices();
  if (y.num_vertices() != n || z.num_vertices() != n) {
    throw InputError("cluster fitting needs one universe");
  }
  WeightedCCInstance inst(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int votes = x.Together(u, v) + y.Together(u, v) + z.Together(u, v);
      if (votes >= 2) inst.SetWPlus(u, v, 1);
    }
  }
  return inst;
}

Clustering ClusterFitting(const Clustering& x, const Clustering& y,
                          const Clustering& z, const ColorProfile& profile,
                          const FairCcSolver& solver) {
  return solver(MajorityInstance(x, y, z), profile);
}

std::string Candidate::Provenance() const {
  std::string out = source.size() == 1 ? "alpha-close-of-index-" :
                                         "fitting-of-triple-";
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(source[i]);
  }
  return out;
}

std::vector<Candidate> FindCandidates(std::span<const Clustering> sampled,
                                      const ColorProfile& profile,
                                      const FairSolver& fair,
                                      const FairCcSolver& fair_cc,
                                      int threads) {
  if (sampled.empty()) throw InputError("no sampled clusterings");
  const int s = static_cast<int>(sampled.size());
  std::vector<Candidate> out;
  for (int i = 0; i < s; ++i) out.push_back({{}, {i}});
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      for (int c = b + 1; c < s; ++c) out.push_back({{}, {a, b, c}});
    }
  }
  internal::ParallelFor(static_cast<int>(out.size()), threads, [&](int k) {
    Candidate& cand = out[k];
    if (cand.source.size() == 1) {
      cand.clustering = fair(sampled[cand.source[0]], profile);
    } else {
      cand.clustering =
          ClusterFitting(sampled[cand.source[0]], sampled[cand.source[1]],
                         sampled[cand.source[2]], profile, fair_cc);
    }
    if (!IsFair(cand.clustering, profile)) {
      throw std::logic_error("candidate " + cand.Provenance() + " is unfair");
    }
  });
  return out;
}

int SelectBest(std::span<const Candidate> candidates,
               std::span<const Clustering> w, int ell) {
  if (candidates.empty()) throw InputError("no candidates to select from");
  if (ell < 1) throw InputError("ell must be at least 1");
  int best = 0;
  std::vector<std::int64_t> best_dist = Distances(w, candidates[0].clustering);
  for (int i = 1; i < static_cast<int>(candidates.size()); ++i) {
    std::vector<std::int64_t> here = Distances(w, candidates[i].clustering);
    if (ComparePowerSums(here, best_dist, ell) < 0) {
      best = i;
      best_dist = std::move(here);
    }
  }
  return best;
}

StreamResult AlgoFairConStream(
    const std::function<bool(StreamTriple&)>& next, int num_vertices,
    int num_indices, const ColorProfile& profile, const StreamParams& params,
    const FairSolver& fair, const FairCcSolver& fair_cc) {
  if (profile.num_vertices() != num_vertices) {
    throw InputError("colors and stream cover different universes");
  }
  StreamResult result;
  result.samples =
      SampleIndices(num_indices, params.g, params.eps, params.seed);
  std::vector<int> sampled = result.samples.j;
  sampled.insert(sampled.end(), result.samples.k.begin(),
                 result.samples.k.end());
  SampledStore store(num_vertices, num_indices, sampled);
  StreamTriple t;
  while (next(t)) store.Ingest(t);
  result.peak_records = store.peak_records();
  result.final_records = store.stored_records();
  result.triples_seen = store.triples_seen();

  std::vector<Clustering> from_j, from_k;
  for (int j : result.samples.j) from_j.push_back(store.Reconstruct(j));
  for (int k : result.samples.k) from_k.push_back(store.Reconstruct(k));
  result.candidates =
      FindCandidates(from_j, profile, fair, fair_cc, params.threads);
  result.chosen = SelectBest(result.candidates, from_k, params.ell);
  result.clustering = result.candidates[result.chosen].clustering;
  result.sample_objective =
      ConsensusObjective(from_k, result.clustering, params.ell);
  return result;
}

StreamResult AlgoFairConStream(std::span<const StreamTriple> stream,
                               int num_vertices, int num_indices,
                               const ColorProfile& profile,
                               const StreamParams& params,
                               const FairSolver& fair,
                               const FairCcSolver& fair_cc) {
  std::size_t pos = 0;
  return AlgoFairConStream(
      [&](StreamTriple& t) {
        if (pos == stream.size()) return false;
        t = stream[pos++];
        return true;
      },
      num_vertices, num_indices, profile, params, fair, fair_cc);
}

std::vector<StreamTriple> EncodeStream(std::span<const Clustering> inputs) {
  std::vector<StreamTriple> out;
  for (int j = 0; j < static_cast<int>(inputs.size()); ++j) {
    const Clustering& c = inputs[j];
    for (Vertex u = 0; u < c.num_vertices(); ++u) {
      for (Vertex v = u + 1; v < c.num_vertices(); ++v) {
        out.push_back({u, v, j, c.Together(u, v) ? 0 : 1});
      }
    }
  }
  return out;
}

}  // namespace robustfair
