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

#include "famtree/urn.hpp"

#include <functional>
#include <stdexcept>

namespace famtree {

namespace {

bool draw_white(const UrnState& urn, RandomStream& rng) {
  return rng.uniform() * urn.total() < urn.white;
}

void check_initial(const UrnState& urn) {
  if (!(urn.white > 0.0) || !(urn.black >= 0.0)) {
    throw std::invalid_argument("urn needs white > 0 and black >= 0");
  }
}

UrnTrajectory record_run(UrnState urn, std::uint64_t draws, std::uint64_t seed,
                         const std::vector<std::uint64_t>& checkpoints,
                         const std::function<void(UrnState&, RandomStream&)>& step) {
  check_initial(urn);
  RandomStream rng(seed);
  UrnTrajectory out;
  out.checkpoints = checkpoints.empty() ? std::vector<std::uint64_t>{draws}
                                        : checkpoints;
  out.white.reserve(out.checkpoints.size());
  out.black.reserve(out.checkpoints.size());
  std::size_t next = 0;
  for (std::uint64_t t = 0; t <= draws && next < out.checkpoints.size(); ++t) {
    while (next < out.checkpoints.size() && out.checkpoints[next] == t) {
      out.white.push_back(urn.white);
      out.black.push_back(urn.black);
      ++next;
    }
    if (t < draws) step(urn, rng);
  }
  return out;
}

}  // namespace

bool polya_step(UrnState& urn, double s, RandomStream& rng) {
  bool white = draw_white(urn, rng);
  (white ? urn.white : urn.black) += s;
  return white;
}

bool polya_step(UrnState& urn, const ReplacementMatrix& r, RandomStream& rng) {
  bool white = draw_white(urn, rng);
  if (white) {
    urn.white += r.a;
    urn.black += r.b;
  } else {
    urn.white += r.c;
    urn.black += r.d;
  }
  return white;
}

UrnTrajectory polya_run(UrnState initial, double s, std::uint64_t draws,
                        std::uint64_t seed,
                        const std::vector<std::uint64_t>& checkpoints) {
  return record_run(initial, draws, seed, checkpoints,
                    [s](UrnState& urn, RandomStream& rng) {
                      polya_step(urn, s, rng);
                    });
}

UrnTrajectory generalized_run(UrnState initial, const ReplacementMatrix& r,
                              std::uint64_t draws, std::uint64_t seed,
                              const std::vector<std::uint64_t>& checkpoints) {
  return record_run(initial, draws, seed, checkpoints,
                    [&r](UrnState& urn, RandomStream& rng) {
                      polya_step(urn, r, rng);
                    });
}

double polya_final_fraction(UrnState initial, double s, std::uint64_t draws,
                            std::uint64_t seed) {
  check_initial(initial);
  RandomStream rng(seed);
  for (std::uint64_t t = 0; t < draws; ++t) polya_step(initial, s, rng);
  return initial.white_fraction();
}

}  // namespace famtree
