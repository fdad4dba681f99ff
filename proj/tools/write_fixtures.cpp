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
#include <iostream>
#include <string>

#include "coordgames/instances.hpp"
#include "coordgames/io.hpp"

// Regenerates the canonical fixture files. The committed files must match
// the builders byte for byte; a unit test enforces it.
int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures/v1";
  for (const std::string& name : coordgames::paper_example_names()) {
    coordgames::LabeledInstance inst = coordgames::paper_example(name);
    std::string path = dir + "/" + name + ".json";
    coordgames::save_game_file(path, inst.game, inst.initial);
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}
