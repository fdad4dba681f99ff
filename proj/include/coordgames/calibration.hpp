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

#include <json.hpp>
#include <map>
#include <string>

#include "coordgames/constants.hpp"

namespace coordgames {

/// Brute-force maximisation of observed steps against each regime's bound
/// formula: exhaustive small structures and colour patterns, seeded
/// configurations on top, every initial strategy when the space is small.
/// Constants are the doubled, rounded-up worst ratios. Fully deterministic,
/// so data/bound_constants.json can be reproduced bit for bit.
struct CalibrationOutcome {
  BoundConstants constants;
  std::map<std::string, double> max_ratios;
  bool all_runs_clean = true;  // no budget or cycle verdicts anywhere
  uint64_t total_runs = 0;
};

CalibrationOutcome run_calibration(bool verbose = false);

nlohmann::ordered_json calibration_to_json(const CalibrationOutcome& outcome);

}  // namespace coordgames
