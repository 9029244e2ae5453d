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

// Fair consensus clustering in the pairwise streaming model. Clusterings
// arrive as (u, v, j, b) triples in any order; a sampled subset of indices is
// kept in O(n) records each and the best fair candidate is picked on a second
// sample.

#ifndef ROBUSTFAIR_STREAMING_H_
#define ROBUSTFAIR_STREAMING_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "robustfair/clustering.h"
#include "robustfair/reductions.h"
#include "robustfair/stream_triple.h"

namespace robustfair {

struct SampledIndices {
  std::vector<int> j;  // candidate sample, sorted and distinct
  std::vector<int> k;  // selection sample, sorted and distinct
  int j_draws = 0;     // draws before deduplication
  int k_draws = 0;
};

// ceil(4 g ln m) and ceil(64 ln m / eps^2) uniform draws with replacement
// (at least one each), deduplicated; a sample whose draw count reaches m is
// all of [m]. Throws InputError unless m >= 1, g > 1 and 0 < eps <= 1.
SampledIndices SampleIndices(int m, double g, double eps, std::uint64_t seed);

// Records of one clustering index. Keeps only together-records that merge two
// components (at most n - 1) and a constant-size digest of the separated
// records. A separated pair already in one component is rejected on arrival.
class IndexSketch {
 public:
  explicit IndexSketch(int num_vertices);

  // Throws MalformedStreamError for a contradicting separated record.
  void Add(Vertex u, Vertex v, int bit);

  std::size_t stored_records() const { return unions_.size(); }

  // The partition spanned by the together-records. Throws
  // MalformedStreamError if the separated digest disagrees with it: more
  // separated records than separated pairs, or a full set that is not them.
  Clustering Reconstruct() const;

 private:
  Vertex Find(Vertex v) const;

  int n_;
  mutable std::vector<Vertex> parent_;
  std::vector<std::pair<Vertex, Vertex>> unions_;
  std::uint64_t separated_count_ = 0;
  std::uint64_t separated_hash_ = 0;
};

// Rebuilds one clustering from its (u, v, bit) records.
Clustering ReconstructClustering(
    std::span<const StreamTriple> records, int num_vertices);

// One sketch per sampled index; everything else is dropped on arrival.
class SampledStore {
 public:
  SampledStore(int num_vertices, int num_indices, std::vector<int> sampled);

  // Throws MalformedStreamError on out-of-range fields or u == v. Returns
  // whether the triple belongs to a sampled index.
  bool Ingest(const StreamTriple& t);

  std::size_t stored_records() const { return stored_; }
  std::size_t peak_records() const { return peak_; }
  std::uint64_t triples_seen() const { return seen_; }
  const std::vector<int>& sampled() const { return sampled_; }

  Clustering Reconstruct(int index) const;

 private:
  int n_, m_;
  std::vector<int> sampled_;
  std::vector<int> slot_;  // index -> sketch slot or -1
  std::vector<IndexSketch> sketches_;
  std::size_t stored_ = 0, peak_ = 0;
  std::uint64_t seen_ = 0;
};

// Majority instance of three clusterings: w+ = 1 iff a pair is together in
// at least two of them. Solved with `solver`.
WeightedCCInstance MajorityInstance(const Clustering& x, const Clustering& y,
                                    const Clustering& z);
Clustering ClusterFitting(const Clustering& x, const Clustering& y,
                          const Clustering& z, const ColorProfile& profile,
                          const FairCcSolver& solver);

struct Candidate {
  Clustering clustering;
  // Sampled positions it came from: one for a closest-fair candidate, three
  // for a fitted one.
  std::vector<int> source;
  std::string Provenance() const;
};

// Closest-fair clustering of every sampled clustering, then one fitted
// clustering per unordered triple, in lexicographic order.
std::vector<Candidate> FindCandidates(std::span<const Clustering> sampled,
                                      const ColorProfile& profile,
                                      const FairSolver& fair,
                                      const FairCcSolver& fair_cc,
                                      int threads = 1);

// Index of the candidate minimizing sum_w dist(w, F)^ell, ties to the first.
int SelectBest(std::span<const Candidate> candidates,
               std::span<const Clustering> w, int ell);

struct StreamParams {
  double g = 8;
  double eps = 0.2;
  int ell = 1;
  std::uint64_t seed = 42;
  int threads = 1;
};

struct StreamResult {
  Clustering clustering;
  SampledIndices samples;
  std::vector<Candidate> candidates;
  int chosen = 0;
  double sample_objective = 0;  // l-mean over the selection sample
  std::size_t peak_records = 0;
  std::size_t final_records = 0;
  std::uint64_t triples_seen = 0;
};

// Pulls triples until `next` returns false; one pass, then reconstruction,
// candidates and selection.
StreamResult AlgoFairConStream(
    const std::function<bool(StreamTriple&)>& next, int num_vertices,
    int num_indices, const ColorProfile& profile, const StreamParams& params,
    const FairSolver& fair, const FairCcSolver& fair_cc);
StreamResult AlgoFairConStream(std::span<const StreamTriple> stream,
                               int num_vertices, int num_indices,
                               const ColorProfile& profile,
                               const StreamParams& params,
                               const FairSolver& fair,
                               const FairCcSolver& fair_cc);

// Every pair of every clustering, in index-major order.
std::vector<StreamTriple> EncodeStream(std::span<const Clustering> inputs);

}  // namespace robustfair

#endif  // ROBUSTFAIR_STREAMING_H_
