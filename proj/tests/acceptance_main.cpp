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
//
// Statistical acceptance gate: runs the validation battery at full size with
// the pinned seed and prints one pass/fail line per criterion. Thresholds
// live next to each criterion in src/validate.cpp. Exit code 0 only if every
// criterion passes.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <thread>

#include "famtree/validate.hpp"

int main(int argc, char** argv) {
  famtree::ValidateOptions options;
  options.seed = 42;
  unsigned hw = std::thread::hardware_concurrency();
  options.threads = hw == 0 ? 1 : hw;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      options.quick = true;
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      options.threads =
          static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else {
      std::cerr << "usage: famtree_acceptance [--quick] [--seed S] "
                   "[--threads T]\n";
      return 2;
    }
  }
  famtree::ValidateReport report = famtree::run_validate(options);
  return famtree::print_report(std::cout, report) ? 0 : 1;
}
