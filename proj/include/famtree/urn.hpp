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

#ifndef FAMTREE_URN_HPP_
#define FAMTREE_URN_HPP_

#include <cstdint>
#include <vector>

#include "famtree/rng.hpp"

namespace famtree {

// Two-color urn with real-valued ball masses. One draw picks white with
// probability white/(white+black) and applies the replacement rule.
struct UrnState {
  double white = 0.0;
  double black = 0.0;

  double total() const noexcept { return white + black; }
  double white_fraction() const noexcept { return white / total(); }
};

// Replacement matrix [[a, b], [c, d]]: drawing white adds a white and b
// black, drawing black adds c white and d black.
struct ReplacementMatrix {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;
};

// One draw with the diagonal rule (+s to the drawn color); returns true if
// white was drawn.
bool polya_step(UrnState& urn, double s, RandomStream& rng);

// One draw with a general replacement matrix; returns true if white was
// drawn.
bool polya_step(UrnState& urn, const ReplacementMatrix& r, RandomStream& rng);

struct UrnTrajectory {
  std::vector<std::uint64_t> checkpoints;  // number of completed draws
  std::vector<double> white;
  std::vector<double> black;
};

// Runs `draws` diagonal steps of size s from `initial`, recording the state
// at each checkpoint (checkpoint 0 allowed: the initial state). The
// white fraction converges a.s. to a Beta(white0/s, black0/s) variable.
UrnTrajectory polya_run(UrnState initial, double s, std::uint64_t draws,
                        std::uint64_t seed,
                        const std::vector<std::uint64_t>& checkpoints);

// Same recording for a general replacement matrix.
UrnTrajectory generalized_run(UrnState initial, const ReplacementMatrix& r,
                              std::uint64_t draws, std::uint64_t seed,
                              const std::vector<std::uint64_t>& checkpoints);

// Final white fraction of one diagonal run; helper for sampling the Beta
// limit by simulation.
double polya_final_fraction(UrnState initial, double s, std::uint64_t draws,
                            std::uint64_t seed);

}  // namespace famtree

#endif  // FAMTREE_URN_HPP_
