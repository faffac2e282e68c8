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

#ifndef BOSONBENCH_IO_HPP
#define BOSONBENCH_IO_HPP

#include <cstdint>
#include <map>
#include <string>

#include "bosonbench/matrix.hpp"
#include "bosonbench/samples.hpp"

namespace bb {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit digest, reported as 16 hex digits. Used to pin input files
/// in run manifests; not a cryptographic hash.
std::string digest_hex(const std::string& content);

/// Shortest decimal form that parses back to the identical double
/// (to_chars round-trip). -inf and nan spell as "-inf" / "nan".
std::string format_double(double v);

/// Matrix file: JSON object {"m": <int>, "entries": [[re, im], ...]} with
/// m*m row-major entries. save/load round-trips are bit-exact.
TransmissionMatrix load_matrix(const std::string& path);
void save_matrix(const TransmissionMatrix& u, const std::string& path);

/// Sample file: one event per line, comma-separated 0-based output modes.
/// Lines are sorted to canonical ascending order on load; duplicates within
/// a line and mode indices >= m are rejected. n is inferred from the first
/// line and enforced afterwards.
SampleSet load_samples(const std::string& path, int m);
void save_samples(const SampleSet& samples, const std::string& path);

/// Parses one sample line ("0,5,12") into a sorted pattern. Exposed for the
/// streaming monitor input path. line_number appears in error messages.
OutputPattern parse_sample_line(const std::string& line, int m, std::size_t line_number);

/// Everything needed to re-run a command: parameters hold literal flag
/// spellings ("--seed") so an argv reconstructs by concatenation, and input
/// files are pinned by digest.
struct RunManifest {
  std::string command;
  std::string version;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::string> input_digests;
};

void save_manifest(const RunManifest& manifest, const std::string& path);
RunManifest load_manifest(const std::string& path);

}  // namespace bb

#endif  // BOSONBENCH_IO_HPP
