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

#ifndef BOSONBENCH_MONITOR_HPP
#define BOSONBENCH_MONITOR_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bosonbench/likelihood.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/samples.hpp"

namespace bb {

struct MonitorOptions {
  std::uint64_t window = 10000;
  /// Stride between emitted window starts.
  std::uint64_t step = 1;
  double rel_lik_threshold = 0.05;
  double grid_step = 1e-3;
  NormMethod norm_method = NormMethod::kExact;
  std::uint64_t mc_draws = 10000;
  std::uint64_t seed = 0;
  int workers = 0;
  /// Single-sample curve updates between exact resummations that cap
  /// floating-point drift of the incremental path.
  std::uint64_t resum_interval = 10000;
  /// Test hook: called at each emission with the window start and the
  /// largest absolute deviation between the incremental curve sums and a
  /// from-scratch resummation.
  std::function<void(std::uint64_t index, double max_abs_dev)> incremental_check;

  void validate() const;
};

struct MonitorPoint {
  /// Position of the window start in the stream (0-based).
  std::uint64_t index = 0;
  double x_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
};

/// Stateful rolling-window estimator. Feed samples in stream order with
/// push(); a MonitorPoint is returned whenever a window boundary configured
/// by MonitorOptions completes. The per-pattern polynomial cache and the
/// normalization are shared across all windows; window advance adjusts the
/// summed log-probability curve incrementally instead of recomputing it.
class StreamMonitor {
 public:
  StreamMonitor(const TransmissionMatrix& u, const std::vector<int>& inputs,
                const MonitorOptions& opts);
  ~StreamMonitor();
  StreamMonitor(StreamMonitor&&) noexcept;
  StreamMonitor& operator=(StreamMonitor&&) noexcept;

  /// Computes outcome polynomials for the given patterns up front on the
  /// configured worker count (they are otherwise computed one by one on
  /// first encounter).
  void preload(const std::vector<OutputPattern>& patterns);

  std::optional<MonitorPoint> push(const OutputPattern& sample);

  std::uint64_t samples_seen() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Batch form: runs the monitor over a complete stream and returns all
/// points. Output length is floor((L - window) / step) + 1.
std::vector<MonitorPoint> rolling_estimates(const SampleSet& stream, const TransmissionMatrix& u,
                                            const std::vector<int>& inputs,
                                            const MonitorOptions& opts = {});

}  // namespace bb

#endif  // BOSONBENCH_MONITOR_HPP
