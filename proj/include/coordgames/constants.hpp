/*
 * Copyright 2026 The coordgames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>

namespace coordgames {

/// Step-count constants for the per-class improvement path bounds. The
/// formulas use n = number of nodes on the largest cycle (for chains),
/// m = number of cycles, k = size of the top part of a partition-cycle.
/// Values come from tools/calibrate: a brute-force maximisation of the
/// observed step/bound ratio over exhaustive small structures and seeded
/// configurations, rounded up and doubled. data/bound_constants.json is the
/// versioned source; the unit tests assert this header matches it.
struct BoundConstants {
  int k_cycle = 4;     // simple cycle: steps <= k_cycle * n
  int k_open = 2;      // open chain: steps <= k_open * n * m^2
  int k_wopen = 1;     // weighted open chain: steps <= k_wopen * n * m^3
  int k_closed = 1;    // closed chain: steps <= k_closed * n * m^2
  int k_pc = 3;        // partition-cycle: steps <= k_pc * n * (n - k)
  int k_pcb = 1;       // with bonuses: steps <= k_pcb * k * n * (n - k)
  int k_cc = 1;        // coalition run on a closed chain: k_cc * n * m^3
  int detector_c = 10; // detectors: loop iterations <= detector_c * (V + E)
};

inline constexpr BoundConstants kBounds{};

/// Every scheduler carries a hard safety cap of this many times its asserted
/// bound; hitting the cap is reported as a Budget verdict, never a hang.
inline constexpr uint64_t kSafetyFactor = 10;

/// Default strategy-space budgets for the exhaustive components.
inline constexpr uint64_t kDefaultProfileBudget = uint64_t(1) << 20;
inline constexpr uint64_t kDefaultCoalitionProfileBudget = uint64_t(1) << 14;

}  // namespace coordgames
