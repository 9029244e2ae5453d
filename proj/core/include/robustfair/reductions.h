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

// Black-box reductions: fair correlation clustering from an unfair solver
// plus a closest-fair solver, and offline fair consensus by picking the best
// fairified input.

#ifndef ROBUSTFAIR_REDUCTIONS_H_
#define ROBUSTFAIR_REDUCTIONS_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "robustfair/clustering.h"

namespace robustfair {

using CcSolver = std::function<Clustering(const WeightedCCInstance&)>;
using FairSolver =
    std::function<Clustering(const Clustering&, const ColorProfile&)>;
using FairCcSolver =
    std::function<Clustering(const WeightedCCInstance&, const ColorProfile&)>;

// Randomized pivot: repeatedly take the next vertex of a seeded random order
// that is still free and cluster it with every free u where w+(pivot, u) is
// at least 1/2.
Clustering PivotCc(const WeightedCCInstance& inst, std::uint64_t seed);

// An unfair CC solver with its nominal factor rho and a closest-fair solver
// with its nominal factor alpha. The factors are labels; acceptance uses the
// observed ones.
struct SolverHandle {
  CcSolver cc;
  double rho = 2.5;
  FairSolver fair;
  double alpha = 17.0;
};

// Pivot with `seed` and the ClosestFair dispatcher.
SolverHandle DefaultSolverHandle(std::uint64_t seed);

struct FairfyResult {
  Clustering unfair;  // D = cc(inst)
  Clustering fair;    // F = fair(D)
};

FairfyResult FairfyCcStages(const WeightedCCInstance& inst,
                            const ColorProfile& profile,
                            const SolverHandle& handle);
Clustering FairfyCc(const WeightedCCInstance& inst, const ColorProfile& profile,
                    const SolverHandle& handle);

// FairfyCc with the default handle, packaged as a fair CC solver.
FairCcSolver DefaultFairCcSolver(std::uint64_t seed);

struct ConsensusResult {
  Clustering clustering;
  int chosen = 0;                   // index of the input it came from
  std::vector<Clustering> candidates;  // fair(inputs[i]) for every i
  double objective = 0;
};

// Returns the fair(inputs[i]) with the smallest l-mean objective, ties to the
// smallest i. Candidates are computed on up to `threads` workers; the result
// does not depend on the count. Throws InputError on an empty input list or
// mismatched universes.
ConsensusResult FairConsensusOffline(std::span<const Clustering> inputs,
                                     const ColorProfile& profile, int ell,
                                     const FairSolver& fair, int threads = 1);

}  // namespace robustfair

#endif  // ROBUSTFAIR_REDUCTIONS_H_
