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

#include "bosonbench/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "bosonbench/errors.hpp"
#include "bosonbench/model.hpp"
#include "bosonbench/parallel.hpp"
#include "curve_internal.hpp"

namespace bb {

void MonitorOptions::validate() const {
  if (window < 100) throw DomainError("monitor window must hold at least 100 samples");
  if (step < 1 || step > window) {
    throw DomainError("monitor step must lie in [1, window]");
  }
}

struct StreamMonitor::Impl {
  TransmissionMatrix u;
  std::vector<int> inputs;
  MonitorOptions opts;
  MleOptions mle_opts;

  NormalizationPoly norm;
  std::vector<double> grid;
  std::vector<double> log_norm;

  std::map<OutputPattern, ProbabilityPolynomial> polys;
  LogLikelihood::CountMap counts;
  std::deque<const ProbabilityPolynomial*> window_polys;
  std::deque<OutputPattern> window_patterns;
  std::vector<double> finite_sum;
  std::vector<std::int64_t> neginf_count;
  std::uint64_t seen = 0;
  std::uint64_t updates_since_resum = 0;

  const ProbabilityPolynomial& poly_for(const OutputPattern& pattern) {
    auto it = polys.find(pattern);
    if (it == polys.end()) {
      it = polys.emplace(pattern, outcome_poly(submatrix_columns(u, inputs, pattern))).first;
    }
    return it->second;
  }

  void check_sample(const OutputPattern& sample) const {
    if (sample.size() != inputs.size()) {
      throw DomainError("stream sample has " + std::to_string(sample.size()) +
                        " detections, expected " + std::to_string(inputs.size()));
    }
    int prev = -1;
    for (int mode : sample) {
      if (mode < 0 || static_cast<std::size_t>(mode) >= u.rows()) {
        throw BoundsError("stream sample references mode " + std::to_string(mode) +
                          " outside [0, " + std::to_string(u.rows()) + ")");
      }
      if (mode <= prev) throw DomainError("stream sample is not strictly increasing");
      prev = mode;
    }
  }

  void resum() {
    internal::sum_tables(counts, polys, grid, finite_sum, neginf_count);
    updates_since_resum = 0;
  }

  MonitorPoint emit(std::uint64_t start) {
    if (opts.incremental_check) {
      std::vector<double> scratch_finite;
      std::vector<std::int64_t> scratch_neginf;
      internal::sum_tables(counts, polys, grid, scratch_finite, scratch_neginf);
      double dev = 0.0;
      for (std::size_t g = 0; g < grid.size(); ++g) {
        if (scratch_neginf[g] != neginf_count[g]) {
          dev = std::numeric_limits<double>::infinity();
          break;
        }
        dev = std::max(dev, std::abs(scratch_finite[g] - finite_sum[g]));
      }
      opts.incremental_check(start, dev);
    }
    // Disjoint windows must reproduce standalone estimates bit-exactly, so
    // their curves are always resummed in canonical pattern order.
    if (opts.step == opts.window) resum();

    const std::vector<double> ell =
        internal::apply_norm(finite_sum, neginf_count, log_norm, opts.window);
    const EstimateReport report = internal::optimize_scanned_curve(
        grid, ell,
        [this](double x) {
          return internal::eval_counts(counts, polys, norm, opts.window, x);
        },
        norm, opts.window, mle_opts);
    MonitorPoint point;
    point.index = start;
    point.x_hat = report.x_hat;
    point.ci_low = report.ci_low;
    point.ci_high = report.ci_high;
    return point;
  }
};

StreamMonitor::StreamMonitor(const TransmissionMatrix& u, const std::vector<int>& inputs,
                             const MonitorOptions& opts)
    : impl_(std::make_unique<Impl>()) {
  opts.validate();
  validate_modes(u, inputs);
  impl_->u = u;
  impl_->inputs = inputs;
  impl_->opts = opts;
  impl_->mle_opts.grid_step = opts.grid_step;
  impl_->mle_opts.rel_lik_threshold = opts.rel_lik_threshold;
  impl_->mle_opts.norm_method = opts.norm_method;
  impl_->mle_opts.mc_draws = opts.mc_draws;
  impl_->mle_opts.seed = opts.seed;
  impl_->mle_opts.workers = opts.workers;
  impl_->norm = opts.norm_method == NormMethod::kExact
                    ? normalization_exact(u, inputs, opts.workers)
                    : normalization_mc(u, inputs, opts.mc_draws, opts.seed, opts.workers);
  impl_->grid = internal::make_grid(opts.grid_step);
  impl_->log_norm = internal::log_norm_table(impl_->norm, impl_->grid);
  impl_->finite_sum.assign(impl_->grid.size(), 0.0);
  impl_->neginf_count.assign(impl_->grid.size(), 0);
}

StreamMonitor::~StreamMonitor() = default;
StreamMonitor::StreamMonitor(StreamMonitor&&) noexcept = default;
StreamMonitor& StreamMonitor::operator=(StreamMonitor&&) noexcept = default;

void StreamMonitor::preload(const std::vector<OutputPattern>& patterns) {
  std::vector<const OutputPattern*> missing;
  for (const OutputPattern& p : patterns) {
    impl_->check_sample(p);
    const auto [it, inserted] = impl_->polys.emplace(p, ProbabilityPolynomial{});
    if (inserted) missing.push_back(&it->first);
  }
  std::vector<ProbabilityPolynomial> computed(missing.size());
  parallel_chunks(missing.size(), 64, resolve_workers(impl_->opts.workers),
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      computed[i] =
                          outcome_poly(submatrix_columns(impl_->u, impl_->inputs, *missing[i]));
                    }
                  });
  for (std::size_t i = 0; i < missing.size(); ++i) {
    impl_->polys[*missing[i]] = std::move(computed[i]);
  }
}

std::optional<MonitorPoint> StreamMonitor::push(const OutputPattern& sample) {
  Impl& s = *impl_;
  s.check_sample(sample);
  const ProbabilityPolynomial& poly = s.poly_for(sample);
  ++s.counts[sample];
  s.window_polys.push_back(&poly);
  s.window_patterns.push_back(sample);
  internal::add_sample(poly, s.grid, +1, s.finite_sum, s.neginf_count);
  ++s.updates_since_resum;
  ++s.seen;

  if (s.window_patterns.size() > s.opts.window) {
    const OutputPattern& old = s.window_patterns.front();
    internal::add_sample(*s.window_polys.front(), s.grid, -1, s.finite_sum, s.neginf_count);
    auto it = s.counts.find(old);
    if (--(it->second) == 0) s.counts.erase(it);
    s.window_patterns.pop_front();
    s.window_polys.pop_front();
    ++s.updates_since_resum;
  }
  if (s.updates_since_resum >= s.opts.resum_interval) s.resum();

  if (s.window_patterns.size() == s.opts.window) {
    const std::uint64_t start = s.seen - s.opts.window;
    if (start % s.opts.step == 0) return s.emit(start);
  }
  return std::nullopt;
}

std::uint64_t StreamMonitor::samples_seen() const { return impl_->seen; }

std::vector<MonitorPoint> rolling_estimates(const SampleSet& stream, const TransmissionMatrix& u,
                                            const std::vector<int>& inputs,
                                            const MonitorOptions& opts) {
  stream.validate();
  if (static_cast<std::size_t>(stream.n) != inputs.size()) {
    throw DomainError("stream photon count does not match the input-mode list");
  }
  if (static_cast<std::size_t>(stream.m) != u.rows()) {
    throw DimensionError("stream declares " + std::to_string(stream.m) +
                         " modes but the matrix has " + std::to_string(u.rows()));
  }
  if (stream.patterns.size() < opts.window) {
    throw SizeError("stream holds " + std::to_string(stream.patterns.size()) +
                    " samples, shorter than one window of " + std::to_string(opts.window));
  }
  StreamMonitor monitor(u, inputs, opts);
  monitor.preload(stream.patterns);
  std::vector<MonitorPoint> points;
  for (const OutputPattern& p : stream.patterns) {
    if (auto point = monitor.push(p)) points.push_back(*point);
  }
  return points;
}

}  // namespace bb
