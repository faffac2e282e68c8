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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "bosonbench/errors.hpp"
#include "bosonbench/haar.hpp"
#include "bosonbench/likelihood.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/monitor.hpp"
#include "bosonbench/noise.hpp"
#include "support.hpp"

using bb::ComplexMatrix;

namespace {

bb::SampleSet window_slice(const bb::SampleSet& stream, std::size_t start, std::size_t len) {
  bb::SampleSet out;
  out.n = stream.n;
  out.m = stream.m;
  out.patterns.assign(stream.patterns.begin() + static_cast<std::ptrdiff_t>(start),
                      stream.patterns.begin() + static_cast<std::ptrdiff_t>(start + len));
  return out;
}

}  // namespace

TEST_CASE("monitor options are validated") {
  bb::MonitorOptions opts;
  opts.window = 50;
  CHECK_THROWS_AS(opts.validate(), bb::DomainError);
  opts.window = 100;
  opts.step = 0;
  CHECK_THROWS_AS(opts.validate(), bb::DomainError);
  opts.step = 101;
  CHECK_THROWS_AS(opts.validate(), bb::DomainError);
  opts.step = 100;
  opts.validate();
}

TEST_CASE("emission schedule and output length") {
  const ComplexMatrix u = bb::haar_unitary(6, 11);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet stream = bb::exact_sampler(u, inputs, 0.8, 400, 2);

  bb::MonitorOptions opts;
  opts.window = 100;
  opts.step = 50;
  const std::vector<bb::MonitorPoint> points = bb::rolling_estimates(stream, u, inputs, opts);
  REQUIRE(points.size() == 7);  // floor((400 - 100) / 50) + 1
  for (std::size_t i = 0; i < points.size(); ++i) CHECK(points[i].index == 50 * i);

  opts.step = 100;
  CHECK(bb::rolling_estimates(stream, u, inputs, opts).size() == 4);

  const bb::SampleSet tiny = window_slice(stream, 0, 99);
  CHECK_THROWS_AS((void)bb::rolling_estimates(tiny, u, inputs, opts), bb::SizeError);
}

TEST_CASE("non-overlapping windows reproduce standalone estimates bitwise") {
  const ComplexMatrix u = bb::haar_unitary(6, 23);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet stream = bb::exact_sampler(u, inputs, 0.7, 300, 8);

  bb::MonitorOptions opts;
  opts.window = 100;
  opts.step = 100;
  const std::vector<bb::MonitorPoint> points = bb::rolling_estimates(stream, u, inputs, opts);
  REQUIRE(points.size() == 3);

  bb::MleOptions mle_opts;
  mle_opts.grid_step = opts.grid_step;
  mle_opts.rel_lik_threshold = opts.rel_lik_threshold;
  for (const bb::MonitorPoint& point : points) {
    const bb::SampleSet window = window_slice(stream, point.index, 100);
    const bb::EstimateReport standalone = bb::mle_estimate(window, u, inputs, mle_opts);
    CHECK(point.x_hat == standalone.x_hat);
    CHECK(point.ci_low == standalone.ci_low);
    CHECK(point.ci_high == standalone.ci_high);
  }
}

TEST_CASE("incremental updates stay within tolerance of a full resum") {
  const ComplexMatrix u = bb::haar_unitary(6, 31);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet stream = bb::exact_sampler(u, inputs, 0.6, 160, 4);

  bb::MonitorOptions opts;
  opts.window = 100;
  opts.step = 1;
  double worst = 0.0;
  std::size_t calls = 0;
  opts.incremental_check = [&](std::uint64_t, double dev) {
    worst = std::max(worst, dev);
    ++calls;
  };
  const std::vector<bb::MonitorPoint> points = bb::rolling_estimates(stream, u, inputs, opts);
  REQUIRE(points.size() == 61);
  CHECK(calls == 61);
  CHECK(worst <= 1e-9);

  bb::MleOptions mle_opts;
  for (std::size_t i : {std::size_t{0}, std::size_t{30}, std::size_t{60}}) {
    const bb::EstimateReport standalone =
        bb::mle_estimate(window_slice(stream, points[i].index, 100), u, inputs, mle_opts);
    CHECK(std::abs(points[i].x_hat - standalone.x_hat) <= 2e-3);
  }
}

TEST_CASE("streaming push matches the batch runner") {
  const ComplexMatrix u = bb::haar_unitary(6, 41);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet stream = bb::exact_sampler(u, inputs, 0.9, 250, 6);

  bb::MonitorOptions opts;
  opts.window = 100;
  opts.step = 25;
  const std::vector<bb::MonitorPoint> batch = bb::rolling_estimates(stream, u, inputs, opts);

  bb::StreamMonitor monitor(u, inputs, opts);
  std::vector<bb::MonitorPoint> streamed;
  for (const bb::OutputPattern& sample : stream.patterns) {
    if (auto point = monitor.push(sample)) streamed.push_back(*point);
  }
  CHECK(monitor.samples_seen() == 250);
  REQUIRE(streamed.size() == batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    CHECK(streamed[i].index == batch[i].index);
    CHECK(streamed[i].x_hat == batch[i].x_hat);
    CHECK(streamed[i].ci_low == batch[i].ci_low);
    CHECK(streamed[i].ci_high == batch[i].ci_high);
  }
}

TEST_CASE("preloading the pattern cache does not change results") {
  const ComplexMatrix u = bb::haar_unitary(6, 51);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet stream = bb::exact_sampler(u, inputs, 0.5, 200, 14);

  bb::MonitorOptions opts;
  opts.window = 100;
  opts.step = 100;

  bb::StreamMonitor plain(u, inputs, opts);
  bb::StreamMonitor preloaded(u, inputs, opts);
  preloaded.preload(stream.patterns);

  for (const bb::OutputPattern& sample : stream.patterns) {
    const auto a = plain.push(sample);
    const auto b = preloaded.push(sample);
    CHECK(a.has_value() == b.has_value());
    if (a && b) {
      CHECK(a->x_hat == b->x_hat);
      CHECK(a->ci_low == b->ci_low);
      CHECK(a->ci_high == b->ci_high);
    }
  }
}

TEST_CASE("malformed samples are rejected at the gate") {
  const ComplexMatrix u = bb::haar_unitary(6, 61);
  bb::MonitorOptions opts;
  opts.window = 100;
  bb::StreamMonitor monitor(u, {0, 1}, opts);
  CHECK_THROWS_AS((void)monitor.push({0, 1, 2}), bb::Error);   // wrong n
  CHECK_THROWS_AS((void)monitor.push({3, 3}), bb::Error);      // collision
  CHECK_THROWS_AS((void)monitor.push({4, 2}), bb::Error);      // unsorted
  CHECK_THROWS_AS((void)monitor.push({0, 6}), bb::Error);      // out of range
  CHECK(monitor.samples_seen() == 0);
  CHECK_FALSE(monitor.push({0, 1}).has_value());
  CHECK(monitor.samples_seen() == 1);
}

TEST_CASE("monitor tracks a shift in the underlying overlap") {
  const ComplexMatrix u = bb::haar_unitary(7, 71);
  const std::vector<int> inputs{0, 1, 2};
  bb::SampleSet stream = bb::exact_sampler(u, inputs, 0.95, 600, 5);
  const bb::SampleSet tail = bb::exact_sampler(u, inputs, 0.3, 600, 6);
  stream.patterns.insert(stream.patterns.end(), tail.patterns.begin(), tail.patterns.end());

  bb::MonitorOptions opts;
  opts.window = 300;
  opts.step = 300;
  const std::vector<bb::MonitorPoint> points = bb::rolling_estimates(stream, u, inputs, opts);
  REQUIRE(points.size() == 4);
  CHECK(points.front().x_hat > 0.8);   // pure high-overlap window
  CHECK(points.back().x_hat < 0.5);    // pure low-overlap window
}
