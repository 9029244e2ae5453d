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

#ifndef ROBUSTFAIR_TESTS_ACCEPTANCE_CRITERIA_H_
#define ROBUSTFAIR_TESTS_ACCEPTANCE_CRITERIA_H_

#include <string>

namespace robustfair::acceptance {

struct Verdict {
  bool passed = true;
  std::string detail;
};

Verdict FtrsSoundness();         // 1
Verdict SlackCoverage();         // 2
Verdict SinglePairInDegree();    // 3
Verdict HittingSetBounds();      // 4
Verdict TwoColorCloseness();     // 5
Verdict MultiColorCloseness();   // 6
Verdict ReductionInequalities(); // 7
Verdict OfflineConsensus();      // 8
Verdict StreamingMatchesOffline();  // 9
Verdict StreamingOrderAndSpace();   // 10
Verdict ThreePartitionWitness();    // 11
Verdict DistIsAMetric();            // 12

}  // namespace robustfair::acceptance

#endif  // ROBUSTFAIR_TESTS_ACCEPTANCE_CRITERIA_H_
