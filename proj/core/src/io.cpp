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

#include "bosonbench/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "bosonbench/errors.hpp"

namespace bb {

namespace {

using nlohmann::json;

json parse_json(const std::string& content, const std::string& path) {
  json j = json::parse(content, nullptr, false);
  if (j.is_discarded()) throw ParseError(path + ": not valid JSON");
  return j;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed on " + path);
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed on " + path);
}

std::string digest_hex(const std::string& content) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : content) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

TransmissionMatrix load_matrix(const std::string& path) {
  const json j = parse_json(read_file(path), path);
  if (!j.is_object() || !j.contains("m") || !j.contains("entries")) {
    throw ParseError(path + ": matrix file must be an object with fields 'm' and 'entries'");
  }
  if (!j["m"].is_number_integer() || j["m"].get<std::int64_t>() < 1) {
    throw ParseError(path + ": field 'm' must be a positive integer");
  }
  const std::size_t m = j["m"].get<std::size_t>();
  const json& entries = j["entries"];
  if (!entries.is_array()) throw ParseError(path + ": 'entries' must be an array");
  if (entries.size() != m * m) {
    throw ParseError(path + ": expected " + std::to_string(m * m) + " entries, found " +
                     std::to_string(entries.size()));
  }
  TransmissionMatrix u(m, m);
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    const json& e = entries[idx];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError(path + ": entry at row " + std::to_string(idx / m) + ", column " +
                       std::to_string(idx % m) + " is not a [re, im] pair");
    }
    u.at(idx / m, idx % m) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  if (!u.all_finite()) throw ParseError(path + ": matrix contains non-finite entries");
  return u;
}

void save_matrix(const TransmissionMatrix& u, const std::string& path) {
  if (!u.square() || u.rows() == 0) {
    throw DimensionError("only nonempty square matrices can be saved");
  }
  json entries = json::array();
  for (const Complex& z : u.data()) entries.push_back(json::array({z.real(), z.imag()}));
  json j;
  j["m"] = u.rows();
  j["entries"] = std::move(entries);
  write_file(path, j.dump(2) + "\n");
}

OutputPattern parse_sample_line(const std::string& line, int m, std::size_t line_number) {
  OutputPattern pattern;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    std::size_t begin = pos;
    std::size_t end = comma;
    while (begin < end && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
    while (end > begin && (line[end - 1] == ' ' || line[end - 1] == '\t' || line[end - 1] == '\r')) {
      --end;
    }
    int value = 0;
    const auto res = std::from_chars(line.data() + begin, line.data() + end, value);
    if (res.ec != std::errc() || res.ptr != line.data() + end || begin == end) {
      throw ParseError("line " + std::to_string(line_number) + ": '" +
                       line.substr(pos, comma - pos) + "' is not a mode index");
    }
    if (value < 0 || value >= m) {
      throw ParseError("line " + std::to_string(line_number) + ": mode " + std::to_string(value) +
                       " outside [0, " + std::to_string(m) + ")");
    }
    pattern.push_back(value);
    pos = comma + 1;
    if (comma == line.size()) break;
  }
  std::sort(pattern.begin(), pattern.end());
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    if (pattern[i] == pattern[i - 1]) {
      throw ParseError("line " + std::to_string(line_number) + ": mode " +
                       std::to_string(pattern[i]) + " fires twice (collision)");
    }
  }
  return pattern;
}

SampleSet load_samples(const std::string& path, int m) {
  if (m < 1) throw DomainError("mode count must be positive");
  const std::string content = read_file(path);
  SampleSet out;
  out.m = m;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string::npos) eol = content.size();
    std::string line = content.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (line.empty() || line == "\r") continue;
    OutputPattern pattern = parse_sample_line(line, m, line_number);
    if (out.patterns.empty()) {
      out.n = static_cast<int>(pattern.size());
      if (out.n < 1) throw ParseError(path + ": first sample line is empty");
      if (out.n > m) {
        throw ParseError(path + ": sample has more detections than modes");
      }
    } else if (pattern.size() != static_cast<std::size_t>(out.n)) {
      throw ParseError("line " + std::to_string(line_number) + ": " +
                       std::to_string(pattern.size()) + " detections where previous lines had " +
                       std::to_string(out.n));
    }
    out.patterns.push_back(std::move(pattern));
  }
  if (out.patterns.empty()) throw ParseError(path + ": no samples found");
  return out;
}

void save_samples(const SampleSet& samples, const std::string& path) {
  samples.validate();
  std::string content;
  for (const OutputPattern& p : samples.patterns) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0) content += ',';
      content += std::to_string(p[i]);
    }
    content += '\n';
  }
  write_file(path, content);
}

void save_manifest(const RunManifest& manifest, const std::string& path) {
  json j;
  j["command"] = manifest.command;
  j["version"] = manifest.version;
  j["parameters"] = manifest.parameters;
  j["inputs"] = manifest.input_digests;
  write_file(path, j.dump(2) + "\n");
}

RunManifest load_manifest(const std::string& path) {
  const json j = parse_json(read_file(path), path);
  if (!j.is_object() || !j.contains("command") || !j.contains("parameters")) {
    throw ParseError(path + ": manifest must contain 'command' and 'parameters'");
  }
  RunManifest manifest;
  manifest.command = j["command"].get<std::string>();
  manifest.version = j.value("version", std::string());
  for (const auto& [key, value] : j["parameters"].items()) {
    manifest.parameters[key] = value.get<std::string>();
  }
  if (j.contains("inputs")) {
    for (const auto& [key, value] : j["inputs"].items()) {
      manifest.input_digests[key] = value.get<std::string>();
    }
  }
  return manifest;
}

}  // namespace bb
