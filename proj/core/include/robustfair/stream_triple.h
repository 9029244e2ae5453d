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

#ifndef ROBUSTFAIR_STREAM_TRIPLE_H_
#define ROBUSTFAIR_STREAM_TRIPLE_H_

#include "robustfair/graph.h"

namespace robustfair {

// One record ((u, v), j, b) of the pairwise stream.
struct StreamTriple {
  Vertex u = 0;
  Vertex v = 0;
  int index = 0;  // j, the clustering this pair belongs to
  int bit = 0;    // 0 together, 1 separated
  friend bool operator==(const StreamTriple&, const StreamTriple&) = default;
};

}  // namespace robustfair

#endif  // ROBUSTFAIR_STREAM_TRIPLE_H_
