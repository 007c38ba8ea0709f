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

// Acceptance gate: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status 0 only when all pass.

#include <cstdlib>
#include <iostream>

#include "edr/suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = edr::kSuiteDefaultSeed;
  if (argc > 1) {
    seed = std::strtoull(argv[1], nullptr, 10);
  }
  const auto results = edr::run_acceptance_suite(seed);
  edr::print_suite_results(results, std::cout);
  if (!edr::all_passed(results)) {
    std::cout << "acceptance: FAILED\n";
    return 1;
  }
  std::cout << "acceptance: all criteria passed\n";
  return 0;
}
