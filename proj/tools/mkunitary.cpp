// Copyright 2026 The bosonbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generates a Haar-random unitary and writes it in the matrix JSON format.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bosonbench/errors.hpp"
#include "bosonbench/haar.hpp"
#include "bosonbench/io.hpp"
#include "bosonbench/matrix.hpp"

int main(int argc, char** argv) {
  CLI::App app{"write a Haar-random unitary as matrix JSON", "bosonbench-mkunitary"};
  int m = 0;
  std::uint64_t seed = 0;
  std::string out = "unitary.json";
  app.add_option("--m", m, "number of modes")->required();
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--out", out, "output path");
  CLI11_PARSE(app, argc, argv);

  try {
    const bb::TransmissionMatrix u = bb::haar_unitary(m, seed);
    bb::save_matrix(u, out);
    std::cerr << "# wrote " << out << ", unitarity deviation = "
              << bb::format_double(bb::unitarity_deviation(u)) << "\n";
  } catch (const bb::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
