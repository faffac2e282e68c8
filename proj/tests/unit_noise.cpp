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
#include <set>
#include <vector>

#include "bosonbench/errors.hpp"
#include "bosonbench/haar.hpp"
#include "bosonbench/likelihood.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/noise.hpp"
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

void check_patterns(const bb::SampleSet& samples, int n, int m) {
  CHECK(samples.n == n);
  CHECK(samples.m == m);
  for (const bb::OutputPattern& p : samples.patterns) {
    REQUIRE(p.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i - 1] < p[i]);
    CHECK(p.front() >= 0);
    CHECK(p.back() < m);
  }
}

}  // namespace

TEST_CASE("exact sampler is deterministic and matches the target distribution") {
  const ComplexMatrix u = bb::haar_unitary(6, 1);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet a = bb::exact_sampler(u, inputs, 0.5, 20000, 3);
  const bb::SampleSet b = bb::exact_sampler(u, inputs, 0.5, 20000, 3);
  CHECK(a.patterns == b.patterns);
  check_patterns(a, 2, 6);
  CHECK(bbtest::tvd(a, bbtest::exact_distribution(u, inputs, 0.5)) < 0.03);
}

TEST_CASE("exact sampler covers the x limits") {
  const ComplexMatrix u = bb::haar_unitary(7, 2);
  const std::vector<int> inputs{0, 1, 2};
  for (double x : {0.0, 1.0}) {
    const bb::SampleSet s = bb::exact_sampler(u, inputs, x, 15000, 9);
    CHECK(bbtest::tvd(s, bbtest::exact_distribution(u, inputs, x)) < 0.04);
  }
}

TEST_CASE("exact sampler refuses a fully bunching configuration") {
  // At x = 1 the balanced splitter never produces a collision-free event.
  CHECK_THROWS_AS((void)bb::exact_sampler(balanced_splitter(), {0, 1}, 1.0, 10, 1), bb::Error);
}

TEST_CASE("mcmc sampler matches the exact distribution") {
  const ComplexMatrix u = bb::haar_unitary(6, 5);
  const std::vector<int> inputs{0, 1};
  const bb::SampleSet s = bb::mcmc_sampler(u, inputs, 0.7, 20000, 11, 100, 5);
  check_patterns(s, 2, 6);
  CHECK(bbtest::tvd(s, bbtest::exact_distribution(u, inputs, 0.7)) < 0.05);
}

TEST_CASE("mcmc sampler is deterministic per seed") {
  const ComplexMatrix u = bb::haar_unitary(6, 5);
  const bb::SampleSet a = bb::mcmc_sampler(u, {0, 1}, 0.7, 500, 21);
  const bb::SampleSet b = bb::mcmc_sampler(u, {0, 1}, 0.7, 500, 21);
  const bb::SampleSet c = bb::mcmc_sampler(u, {0, 1}, 0.7, 500, 22);
  CHECK(a.patterns == b.patterns);
  CHECK_FALSE(a.patterns == c.patterns);
}

TEST_CASE("mcmc sampler guards") {
  const ComplexMatrix u = bb::haar_unitary(24, 5);
  std::vector<int> inputs;
  for (int i = 0; i < 10; ++i) inputs.push_back(i);
  CHECK_THROWS_AS((void)bb::mcmc_sampler(u, inputs, 0.5, 10, 1), bb::SizeError);
  CHECK_THROWS_AS((void)bb::mcmc_sampler(u, {0, 1}, 0.5, 10, 1, 10, 0), bb::DomainError);
  CHECK_THROWS_AS((void)bb::mcmc_sampler(u, {0, 1}, 1.5, 10, 1), bb::DomainError);
}

TEST_CASE("matrix perturbation scales with sigma and preserves the original") {
  const ComplexMatrix u = bb::haar_unitary(10, 31);
  const ComplexMatrix same = bb::perturb_matrix(u, 0.0, 9);
  CHECK(same == u);

  const ComplexMatrix pa = bb::perturb_matrix(u, 0.05, 9);
  const ComplexMatrix pb = bb::perturb_matrix(u, 0.05, 9);
  CHECK(pa == pb);
  CHECK_FALSE(pa == u);

  // RMS entry magnitude of an m x m unitary is 1/sqrt(m); each component
  // receives sd = sigma * RMS, so the expected squared Frobenius difference
  // is 2 m^2 sd^2 = 2 m sigma^2.
  double frob2 = 0.0;
  for (std::size_t i = 0; i < u.data().size(); ++i) frob2 += std::norm(pa.data()[i] - u.data()[i]);
  const double expected = 2.0 * 10.0 * 0.05 * 0.05;
  CHECK(frob2 > expected / 3.0);
  CHECK(frob2 < expected * 3.0);
  CHECK_THROWS_AS((void)bb::perturb_matrix(u, -0.1, 1), bb::DomainError);
}

TEST_CASE("noise config validation and masking") {
  bb::NoiseConfig cfg;
  cfg.x_true = 0.9;
  cfg.dark_count_prob = 0.03;
  cfg.multiphoton_prob = 0.012;
  cfg.matrix_noise_sigma = 0.01;
  cfg.validate();

  const bb::NoiseConfig none = cfg.restricted_to({});
  CHECK(none.dark_count_prob == 0.0);
  CHECK(none.multiphoton_prob == 0.0);
  CHECK(none.matrix_noise_sigma == 0.0);
  CHECK(none.x_true == 0.9);

  const bb::NoiseConfig some = cfg.restricted_to({bb::Imperfection::kDarkCounts});
  CHECK(some.dark_count_prob == 0.03);
  CHECK(some.multiphoton_prob == 0.0);

  bb::NoiseConfig bad = cfg;
  bad.x_true = -0.5;
  CHECK_THROWS_AS(bad.validate(), bb::ConfigError);
  bad = cfg;
  bad.dark_count_prob = 1.5;
  CHECK_THROWS_AS(bad.validate(), bb::ConfigError);
  bad = cfg;
  bad.matrix_noise_sigma = -1.0;
  CHECK_THROWS_AS(bad.validate(), bb::ConfigError);
}

TEST_CASE("noisy generator emits well-formed, seed-deterministic samples") {
  const ComplexMatrix u = bb::haar_unitary(8, 41);
  const std::vector<int> inputs{0, 1, 2};
  bb::NoiseConfig cfg;
  cfg.x_true = 0.9;
  cfg.dark_count_prob = 0.1;
  cfg.multiphoton_prob = 0.05;
  cfg.matrix_noise_sigma = 0.02;
  cfg.seed = 77;
  const bb::SampleSet a = bb::generate_noisy_samples(u, inputs, cfg, 3000);
  const bb::SampleSet b = bb::generate_noisy_samples(u, inputs, cfg, 3000);
  CHECK(a.patterns == b.patterns);
  check_patterns(a, 3, 8);

  cfg.seed = 78;
  const bb::SampleSet c = bb::generate_noisy_samples(u, inputs, cfg, 3000);
  CHECK_FALSE(a.patterns == c.patterns);
}

TEST_CASE("clean noisy-generator config reproduces the exact distribution") {
  const ComplexMatrix u = bb::haar_unitary(7, 51);
  const std::vector<int> inputs{0, 1};
  bb::NoiseConfig cfg;
  cfg.x_true = 0.6;
  cfg.seed = 5;
  const bb::SampleSet s = bb::generate_noisy_samples(u, inputs, cfg, 20000);
  CHECK(bbtest::tvd(s, bbtest::exact_distribution(u, inputs, 0.6)) < 0.03);
}

TEST_CASE("noise pushes the estimated overlap down") {
  const ComplexMatrix u = bb::haar_unitary(8, 61);
  const std::vector<int> inputs{0, 1, 2};
  bb::NoiseConfig clean;
  clean.x_true = 1.0;
  clean.seed = 3;
  bb::NoiseConfig dirty = clean;
  dirty.multiphoton_prob = 0.15;
  const double x_clean =
      bb::mle_estimate(bb::generate_noisy_samples(u, inputs, clean, 4000), u, inputs).x_hat;
  const double x_dirty =
      bb::mle_estimate(bb::generate_noisy_samples(u, inputs, dirty, 4000), u, inputs).x_hat;
  CHECK(x_dirty < x_clean - 0.02);
}

TEST_CASE("noisy generator rejects saturated rates") {
  const ComplexMatrix u = bb::haar_unitary(8, 41);
  bb::NoiseConfig cfg;
  cfg.dark_count_prob = 0.5;
  cfg.multiphoton_prob = 0.2;  // 0.5 + 3 * 0.2 > 1
  CHECK_THROWS_AS((void)bb::generate_noisy_samples(u, {0, 1, 2}, cfg, 10), bb::ConfigError);
}

TEST_CASE("error budget enforces cumulative rungs and labels rows") {
  const ComplexMatrix u = bb::haar_unitary(6, 71);
  const std::vector<int> inputs{0, 1};
  bb::NoiseConfig strengths;
  strengths.x_true = 0.9;
  strengths.dark_count_prob = 0.05;
  strengths.multiphoton_prob = 0.02;
  strengths.matrix_noise_sigma = 0.01;
  strengths.seed = 10;

  const std::vector<bb::BudgetRung> ladder = {
      {"hom", {}},
      {"mis", {bb::Imperfection::kMatrixNoise}},
      {"multi", {bb::Imperfection::kMatrixNoise, bb::Imperfection::kMultiphoton}},
      {"dark",
       {bb::Imperfection::kMatrixNoise, bb::Imperfection::kMultiphoton,
        bb::Imperfection::kDarkCounts}},
  };
  const std::vector<bb::BudgetRow> rows = bb::error_budget(u, inputs, strengths, ladder, 1500);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].label == "hom");
  CHECK(rows[3].label == "dark");
  for (const bb::BudgetRow& row : rows) {
    CHECK_FALSE(row.rel_log10_likelihood.has_value());
    CHECK(row.ci_low <= row.x_hat);
    CHECK(row.ci_high >= row.x_hat);
  }

  const std::vector<bb::BudgetRung> broken = {
      {"multi", {bb::Imperfection::kMultiphoton}},
      {"dark", {bb::Imperfection::kDarkCounts}},
  };
  CHECK_THROWS_AS((void)bb::error_budget(u, inputs, strengths, broken, 100), bb::ConfigError);
  CHECK_THROWS_AS((void)bb::error_budget(u, inputs, strengths, {}, 100), bb::ConfigError);
}

TEST_CASE("error budget scores rungs against reference data when given") {
  const ComplexMatrix u = bb::haar_unitary(6, 81);
  const std::vector<int> inputs{0, 1};
  bb::NoiseConfig strengths;
  strengths.x_true = 0.85;
  strengths.multiphoton_prob = 0.05;
  strengths.seed = 4;
  const std::vector<bb::BudgetRung> ladder = {
      {"hom", {}},
      {"multi", {bb::Imperfection::kMultiphoton}},
  };
  const bb::SampleSet reference = bb::exact_sampler(u, inputs, 0.85, 2500, 12);
  const std::vector<bb::BudgetRow> rows =
      bb::error_budget(u, inputs, strengths, ladder, 1500, &reference);
  REQUIRE(rows.size() == 2);
  for (const bb::BudgetRow& row : rows) {
    REQUIRE(row.rel_log10_likelihood.has_value());
    CHECK(*row.rel_log10_likelihood <= 1e-9);
  }
}
