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

#include "robustfair/reductions.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "parallel.h"
#include "robustfair/errors.h"
#include "robustfair/fair_multicolor.h"

namespace robustfair {

Clustering PivotCc(const WeightedCCInstance& inst, std::uint64_t seed) {
  const int n = inst.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  const Rational half(1, 2);
  std::vector<int> assignment(n, -1);
  int next_label = 0;
  for (Vertex pivot : order) {
    if (assignment[pivot] >= 0) continue;
    assignment[pivot] = next_label;
    for (Vertex u = 0; u < n; ++u) {
      if (assignment[u] < 0 && inst.w_plus(pivot, u) >= half) {
        assignment[u] = next_label;
      }
    }
    ++next_label;
  }
  return Clustering(assignment);
}

SolverHandle DefaultSolverHandle(std::uint64_t seed) {
  SolverHandle handle;
  handle.cc = [seed](const WeightedCCInstance& inst) {
    return PivotCc(inst, seed);
  };
  handle.fair = [](const Clustering& c, const ColorProfile& profile) {
    return ClosestFair(c, profile);
  };
  return handle;
}

FairfyResult FairfyCcStages(const WeightedCCInstance& inst,
                            const ColorProfile& profile,
                            const SolverHandle& handle) {
  if (inst.num_vertices() != profile.num_vertices()) {
    throw InputError("instance and colors cover different universes");
  }
  FairfyResult result;
  result.unfair = handle.cc(inst);
  result.fair = handle.fair(result.unfair, profile);
  if (!IsFair(result.fair, profile)) {
    throw std::logic_error("fair solver returned an unfair clustering");
  }
  return result;
}

Clustering FairfyCc(const WeightedCCInstance& inst, const ColorProfile& profile,
                    const SolverHandle& handle) {
  return FairfyCcStages(inst, profile, handle).fair;
}

FairCcSolver DefaultFairCcSolver(std::uint64_t seed) {
  return [handle = DefaultSolverHandle(seed)](const WeightedCCInstance& inst,
                                              const ColorProfile& profile) {
    return FairfyCc(inst, profile, handle);
  };
}

ConsensusResult FairConsensusOffline(std::span<const Clustering> inputs,
                                     const ColorProfile& profile, int ell,
                                     const FairSolver& fair, int threads) {
  if (inputs.empty()) throw InputError("consensus needs at least one input");
  if (ell < 1) throw InputError("ell must be at least 1");
  for (const Clustering& c : inputs) {
    if (c.num_vertices() != profile.num_vertices()) {
      throw InputError("inputs and colors cover different universes");
    }
  }
  const int m = static_cast<int>(inputs.size());
  ConsensusResult result;
  result.candidates.resize(m);
  internal::ParallelFor(m, threads, [&](int i) {
    result.candidates[i] = fair(inputs[i], profile);
  });

  std::vector<std::int64_t> best = Distances(inputs, result.candidates[0]);
  for (int i = 1; i < m; ++i) {
    const std::vector<std::int64_t> here =
        Distances(inputs, result.candidates[i]);
    if (ComparePowerSums(here, best, ell) < 0) {
      best = here;
      result.chosen = i;
    }
  }
  result.clustering = result.candidates[result.chosen];
  result.objective = ConsensusObjective(inputs, result.clustering, ell);
  return result;
}

}  // namespace robustfair
