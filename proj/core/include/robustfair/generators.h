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

// Seeded instance generators. Same seed, same instance.

#ifndef ROBUSTFAIR_GENERATORS_H_
#define ROBUSTFAIR_GENERATORS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "robustfair/clustering.h"
#include "robustfair/graph.h"
#include "robustfair/stream_triple.h"

namespace robustfair::gen {

// Each ordered pair u != v is an edge with probability p.
DirectedGraph RandomDigraph(int n, double p, std::uint64_t seed);

// `count` distinct pairs with s != t, sorted. Fewer if n is too small.
std::vector<VertexPair> RandomPairs(int n, int count, std::uint64_t seed);

// A shuffled coloring with color c used n * ratio[c] / sum(ratio) times.
// Throws InputError unless sum(ratio) divides n.
std::vector<int> RandomColors(int n, std::span<const std::int64_t> ratio,
                              std::uint64_t seed);

// Uniform labels from [0, max_clusters); max_clusters = 0 means n.
Clustering RandomClustering(int n, std::uint64_t seed, int max_clusters = 0);

// Every pair of every input once, in shuffled order.
std::vector<StreamTriple> RandomStream(std::span<const Clustering> inputs,
                                       std::uint64_t seed);

// w+ drawn uniformly from {0, 1/den, ..., 1}.
WeightedCCInstance RandomCcInstance(int n, std::uint64_t seed, int den = 4);

}  // namespace robustfair::gen

#endif  // ROBUSTFAIR_GENERATORS_H_
