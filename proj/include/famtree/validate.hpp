// Copyright 2026 The famtree authors
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

#ifndef FAMTREE_VALIDATE_HPP_
#define FAMTREE_VALIDATE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace famtree {

struct ValidateOptions {
  std::uint64_t seed = 42;
  unsigned threads = 1;
  bool quick = false;     // smaller runs, widened tolerances
  int inject_failure = 0; // corrupt the given criterion (testing the harness)
  double scale_n = 1.0;   // multiplies tree sizes (testing hooks)
  double scale_reps = 1.0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values and the thresholds they faced
  double seconds = 0.0;
};

struct ValidateReport {
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
};

// Runs the full validation battery: each criterion is deterministic in
// (seed, quick, scale factors), with per-criterion stream seeds so that
// criteria can be reordered or run alone without shifting random numbers.
ValidateReport run_validate(const ValidateOptions& options);

// One line per criterion plus a summary line. Returns report.all_pass().
bool print_report(std::ostream& out, const ValidateReport& report);

}  // namespace famtree

#endif  // FAMTREE_VALIDATE_HPP_
