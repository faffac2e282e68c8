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

#include <cmath>
#include <limits>
#include <vector>

#include "bosonbench/errors.hpp"
#include "bosonbench/haar.hpp"
#include "bosonbench/likelihood.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/model.hpp"
#include "bosonbench/noise.hpp"
#include "bosonbench/polynomial.hpp"
#include "support.hpp"

using bb::Complex;
using bb::ComplexMatrix;

namespace {

ComplexMatrix balanced_splitter() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m.at(0, 0) = Complex(r, 0.0);
  m.at(0, 1) = Complex(r, 0.0);
  m.at(1, 0) = Complex(r, 0.0);
  m.at(1, 1) = Complex(-r, 0.0);
  return m;
}

}  // namespace

TEST_CASE("exact normalization on the balanced splitter") {
  const bb::NormalizationPoly norm = bb::normalization_exact(balanced_splitter(), {0, 1});
  // Only one collision-free pattern exists, so N(x) = (1 - x^2)/2.
  CHECK(norm.value_at(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(norm.value_at(1.0) == doctest::Approx(0.0));
  CHECK(norm.value_at(0.5) == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(norm.stderr_at(0.7) == 0.0);
  CHECK(norm.method == bb::NormMethod::kExact);
}

TEST_CASE("bosons bunch: N(1) < N(0) < 1 on a generic unitary") {
  const ComplexMatrix u = bb::haar_unitary(6, 21);
  const bb::NormalizationPoly norm = bb::normalization_exact(u, {0, 1});
  CHECK(norm.value_at(0.0) < 1.0);
  CHECK(norm.value_at(1.0) < norm.value_at(0.0));
  CHECK(norm.value_at(1.0) > 0.0);
}

TEST_CASE("normalization guard refuses huge enumerations") {
  const ComplexMatrix u = bb::haar_unitary(40, 3);
  CHECK_THROWS_AS((void)bb::normalization_exact(u, {0, 1, 2, 3, 4, 5, 6, 7}), bb::SizeError);
}

TEST_CASE("Monte Carlo normalization brackets the exact one") {
  const ComplexMatrix u = bb::haar_unitary(6, 8);
  const std::vector<int> inputs{0, 1};
  const bb::NormalizationPoly exact = bb::normalization_exact(u, inputs);
  const bb::NormalizationPoly mc = bb::normalization_mc(u, inputs, 4000, 11);
  REQUIRE(mc.coeffs.size() == exact.coeffs.size());
  for (std::size_t d = 0; d < mc.coeffs.size(); ++d) {
    CHECK(std::abs(mc.coeffs[d] - exact.coeffs[d]) <= 3.0 * mc.coeff_stderr[d] + 1e-12);
  }
  CHECK(mc.draws == 4000);
  CHECK(mc.method == bb::NormMethod::kMonteCarlo);
  CHECK(mc.stderr_at(0.5) > 0.0);
}

TEST_CASE("Monte Carlo normalization is worker-count invariant") {
  const ComplexMatrix u = bb::haar_unitary(8, 13);
  const std::vector<int> inputs{0, 1, 2};
  const bb::NormalizationPoly a = bb::normalization_mc(u, inputs, 2000, 5, 1);
  const bb::NormalizationPoly b = bb::normalization_mc(u, inputs, 2000, 5, 4);
  CHECK(a.coeffs == b.coeffs);
  CHECK(a.coeff_stderr == b.coeff_stderr);
  const bb::NormalizationPoly c = bb::normalization_mc(u, inputs, 2000, 6, 1);
  CHECK_FALSE(a.coeffs == c.coeffs);
}

TEST_CASE("Monte Carlo normalization refuses too few draws") {
  const ComplexMatrix u = bb::haar_unitary(6, 8);
  CHECK_THROWS_AS((void)bb::normalization_mc(u, {0, 1}, 50, 1), bb::DomainError);
}

TEST_CASE("log-likelihood matches a hand-built sum") {
  const ComplexMatrix u = bb::haar_unitary(5, 30);
  const std::vector<int> inputs{0, 1};
  bb::SampleSet samples;
  samples.n = 2;
  samples.m = 5;
  samples.patterns = {{0, 3}, {1, 2}, {0, 3}};
  const bb::NormalizationPoly norm = bb::normalization_exact(u, inputs);
  const bb::LogLikelihood loglik(samples, u, inputs, norm);
  CHECK(loglik.sample_count() == 3);

  for (double x : {0.0, 0.25, 0.8, 1.0}) {
    const double p03 = bb::eval_poly(bb::outcome_poly(bb::submatrix_columns(u, inputs, {0, 3})), x);
    const double p12 = bb::eval_poly(bb::outcome_poly(bb::submatrix_columns(u, inputs, {1, 2})), x);
    const double expect =
        2.0 * std::log(p03) + std::log(p12) - 3.0 * std::log(norm.value_at(x));
    CHECK(loglik(x) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("impossible outcome sends the log-likelihood to -inf") {
  bb::SampleSet samples;
  samples.n = 2;
  samples.m = 2;
  samples.patterns = {{0, 1}};
  const ComplexMatrix u = balanced_splitter();
  const bb::LogLikelihood loglik(samples, u, {0, 1}, bb::normalization_exact(u, {0, 1}));
  CHECK(loglik(1.0) == -std::numeric_limits<double>::infinity());
  CHECK(loglik(0.5) == doctest::Approx(0.0));  // P equals N here
}

TEST_CASE("count-map and sample-set constructors agree bitwise") {
  const ComplexMatrix u = bb::haar_unitary(6, 44);
  const std::vector<int> inputs{0, 1};
  bb::SampleSet samples;
  samples.n = 2;
  samples.m = 6;
  samples.patterns = {{2, 4}, {0, 1}, {2, 4}, {3, 5}, {2, 4}};
  bb::LogLikelihood::CountMap counts;
  for (const auto& p : samples.patterns) ++counts[p];
  const bb::NormalizationPoly norm = bb::normalization_exact(u, inputs);
  const bb::LogLikelihood a(samples, u, inputs, norm);
  const bb::LogLikelihood b(std::move(counts), u, inputs, norm);
  for (double x : {0.0, 0.3, 0.9, 1.0}) CHECK(a(x) == b(x));
}

TEST_CASE("mle recovers the truth on exactly sampled data") {
  const ComplexMatrix u = bb::haar_unitary(6, 55);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet samples = bb::exact_sampler(u, inputs, 0.7, 4000, 99);
  const bb::EstimateReport report = bb::mle_estimate(samples, u, inputs);
  CHECK(report.x_hat > 0.5);
  CHECK(report.x_hat < 0.9);
  CHECK(report.ci_low <= report.x_hat);
  CHECK(report.ci_high >= report.x_hat);
  CHECK(report.ci_low <= 0.7);
  CHECK(report.ci_high >= 0.7);
  CHECK_FALSE(report.flat);
  CHECK(report.sample_count == 4000);
  CHECK(report.loglik_curve.size() == 1001);
  CHECK(report.collision_fraction > 0.0);
  CHECK(report.norm_correction > 1.0);
  CHECK(report.mc_inflation == 0.0);
}

TEST_CASE("curve-based estimate equals the one-shot estimate bitwise") {
  const ComplexMatrix u = bb::haar_unitary(6, 55);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet samples = bb::exact_sampler(u, inputs, 0.6, 1500, 7);
  bb::MleOptions opts;
  const bb::EstimateReport a = bb::mle_estimate(samples, u, inputs, opts);
  const bb::LogLikelihood loglik(samples, u, inputs, bb::normalization_exact(u, inputs));
  const bb::EstimateReport b = bb::mle_estimate_curve(loglik, opts);
  CHECK(a.x_hat == b.x_hat);
  CHECK(a.ci_low == b.ci_low);
  CHECK(a.ci_high == b.ci_high);
  CHECK(a.x_hat_loglik == b.x_hat_loglik);
  REQUIRE(a.loglik_curve.size() == b.loglik_curve.size());
  for (std::size_t i = 0; i < a.loglik_curve.size(); ++i) {
    CHECK(a.loglik_curve[i].second == b.loglik_curve[i].second);
  }
}

TEST_CASE("single-pattern splitter data is reported flat") {
  // Every anti-bunched splitter sample has P(x) = N(x): the curve is zero
  // wherever it is finite, so the data carry no information about x.
  bb::SampleSet samples;
  samples.n = 2;
  samples.m = 2;
  for (int i = 0; i < 50; ++i) samples.patterns.push_back({0, 1});
  const bb::EstimateReport report = bb::mle_estimate(samples, balanced_splitter(), {0, 1});
  CHECK(report.flat);
  CHECK(report.ci_low == 0.0);
  CHECK(report.ci_high == 1.0);
}

TEST_CASE("threshold widens or narrows the interval") {
  const ComplexMatrix u = bb::haar_unitary(6, 70);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet samples = bb::exact_sampler(u, inputs, 0.5, 3000, 3);
  bb::MleOptions tight;
  tight.rel_lik_threshold = 0.5;
  bb::MleOptions loose;
  loose.rel_lik_threshold = 0.01;
  const bb::EstimateReport a = bb::mle_estimate(samples, u, inputs, tight);
  const bb::EstimateReport b = bb::mle_estimate(samples, u, inputs, loose);
  CHECK(a.ci_high - a.ci_low < b.ci_high - b.ci_low);
}

TEST_CASE("estimate option validation") {
  const ComplexMatrix u = bb::haar_unitary(4, 2);
  const bb::SampleSet samples = bb::exact_sampler(u, {0, 1}, 0.5, 50, 1);
  bb::MleOptions opts;
  opts.grid_step = 0.9;
  CHECK_THROWS_AS((void)bb::mle_estimate(samples, u, {0, 1}, opts), bb::DomainError);
  opts.grid_step = 1e-9;
  CHECK_THROWS_AS((void)bb::mle_estimate(samples, u, {0, 1}, opts), bb::DomainError);
  opts.grid_step = 1e-3;
  opts.rel_lik_threshold = 1.5;
  CHECK_THROWS_AS((void)bb::mle_estimate(samples, u, {0, 1}, opts), bb::DomainError);
}

TEST_CASE("empty sample set is rejected") {
  const ComplexMatrix u = bb::haar_unitary(4, 2);
  bb::SampleSet samples;
  samples.n = 2;
  samples.m = 4;
  CHECK_THROWS_AS((void)bb::mle_estimate(samples, u, {0, 1}), bb::DomainError);
}

TEST_CASE("Monte Carlo normalization inflates the reported uncertainty") {
  const ComplexMatrix u = bb::haar_unitary(8, 77);
  const std::vector<int> inputs{0, 1, 2};
  const bb::SampleSet samples = bb::exact_sampler(u, inputs, 0.8, 2000, 5);
  bb::MleOptions opts;
  opts.norm_method = bb::NormMethod::kMonteCarlo;
  opts.mc_draws = 2000;
  opts.seed = 17;
  const bb::EstimateReport report = bb::mle_estimate(samples, u, inputs, opts);
  CHECK(report.mc_inflation > 0.0);
  CHECK(report.ci_low <= report.x_hat);
  CHECK(report.ci_high >= report.x_hat);
}

TEST_CASE("accuracy benchmark returns one row per photon count") {
  const ComplexMatrix u = bb::haar_unitary(10, 666);
  const std::vector<bb::AccuracyRow> rows =
      bb::accuracy_benchmark({2, 3}, u, {0, 1, 2}, 1200, 0.8, 4);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 2);
  CHECK(rows[1].n == 3);
  for (const bb::AccuracyRow& row : rows) {
    CHECK(row.ci_width > 0.0);
    CHECK(row.ci_width == doctest::Approx(row.ci_high - row.ci_low));
    CHECK(row.x_hat >= row.ci_low);
    CHECK(row.x_hat <= row.ci_high);
  }
  CHECK_THROWS_AS(
      (void)bb::accuracy_benchmark({4}, u, {0, 1, 2}, 100, 0.8, 4), bb::DomainError);
  CHECK_THROWS_AS(
      (void)bb::accuracy_benchmark({0}, u, {0, 1, 2}, 100, 0.8, 4), bb::DomainError);
}
