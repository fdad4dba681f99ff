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
#include <fstream>
#include <iostream>

#include "coordgames/calibration.hpp"
#include "coordgames/io.hpp"

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/bound_constants.json";
  coordgames::CalibrationOutcome outcome = coordgames::run_calibration(true);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << coordgames::canonical_dump(coordgames::calibration_to_json(outcome));
  std::cout << "wrote " << out_path << "\n";
  if (!outcome.all_runs_clean) {
    std::cerr << "some runs hit their safety cap; constants are not trustworthy\n";
    return 1;
  }
  return 0;
}
