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

#ifndef ROBUSTFAIR_ERRORS_H_
#define ROBUSTFAIR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace robustfair {

// Malformed or out-of-range input: bad vertex ids, unparsable files,
// inconsistent color profiles. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on data violating its documented precondition
// (for example a non-p-divisible clustering handed to MakeClustersFair).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A pairwise stream whose records contradict each other.
class MalformedStreamError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace robustfair

#endif  // ROBUSTFAIR_ERRORS_H_
