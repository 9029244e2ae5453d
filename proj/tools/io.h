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

// Text and JSON formats read and written by the command line tool. Parse
// errors are InputError with "name:line: " in front.

#ifndef ROBUSTFAIR_TOOLS_IO_H_
#define ROBUSTFAIR_TOOLS_IO_H_

#include <cstdint>
#include <istream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "robustfair/clustering.h"
#include "robustfair/ftrs.h"
#include "robustfair/graph.h"
#include "robustfair/stream_triple.h"

namespace robustfair::io {

// 64-bit FNV-1a, printed as 16 hex digits in reports.
class Fnv1a {
 public:
  void Update(const std::string& bytes);
  std::uint64_t value() const { return h_; }
  std::string Hex() const;

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string HashHex(const std::string& bytes);

// Whole file as a string; InputError if it cannot be opened.
std::string ReadFile(const std::string& path);

// "n m" then m lines "tail head".
DirectedGraph ReadGraph(std::istream& in, const std::string& name);
void WriteGraph(std::ostream& out, const DirectedGraph& g);

// Lines "s t".
std::vector<VertexPair> ReadPairs(std::istream& in, const std::string& name,
                                  int num_vertices);
void WritePairs(std::ostream& out, const std::vector<VertexPair>& pairs);

struct ClusteringFile {
  Clustering clustering;
  std::optional<std::vector<int>> colors;
};

// Lines "vertex cluster [color]"; every vertex 0..n-1 exactly once, the color
// column on all lines or none.
ClusteringFile ReadClustering(std::istream& in, const std::string& name);
void WriteClustering(std::ostream& out, const Clustering& c,
                     const std::vector<int>* colors = nullptr);

// Lines "vertex color".
std::vector<int> ReadColors(std::istream& in, const std::string& name);

// Lines "u v w_plus" with w_plus an integer, fraction or decimal in [0, 1].
// Pairs not listed get w_plus = 0. num_vertices < 0 infers max id + 1.
WeightedCCInstance ReadWeightedInstance(std::istream& in,
                                        const std::string& name,
                                        int num_vertices = -1);
void WriteWeightedInstance(std::ostream& out, const WeightedCCInstance& inst);

// Pulls "u v j b" records one line at a time and hashes what it reads.
class StreamReader {
 public:
  StreamReader(std::istream& in, std::string name)
      : in_(in), name_(std::move(name)) {}
  bool Next(StreamTriple& t);
  int line() const { return line_; }
  std::string Hash() const { return hash_.Hex(); }

 private:
  std::istream& in_;
  std::string name_;
  int line_ = 0;
  Fnv1a hash_;
};

void WriteStream(std::ostream& out, const std::vector<StreamTriple>& stream);

nlohmann::json PreserverToJson(const Preserver& h);
Preserver PreserverFromJson(const nlohmann::json& j, const std::string& name);

}  // namespace robustfair::io

#endif  // ROBUSTFAIR_TOOLS_IO_H_
