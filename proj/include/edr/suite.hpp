// Copyright 2026 The edrlab developers
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

#ifndef EDRLAB_SUITE_HPP
#define EDRLAB_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace edr {

inline constexpr std::uint64_t kSuiteDefaultSeed = 987654321ULL;

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full verification battery: spin closed forms and circle
/// tightness, the mixed-state bound separation, extremal points, randomized
/// universality of every universally valid relation, Heisenberg violability,
/// the proof-vector / purified-extension identity bridge, pure-state
/// collapse, and the comparator dominance check. All tolerances and draw
/// counts are fixed here; the seed only moves the random streams.
std::vector<CriterionResult> run_acceptance_suite(
    std::uint64_t seed = kSuiteDefaultSeed);

/// One line per criterion: "[PASS] 3 mixed-state-separation ...".
void print_suite_results(const std::vector<CriterionResult>& results,
                         std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace edr

#endif  // EDRLAB_SUITE_HPP
