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

#ifndef BOSONBENCH_NOISE_HPP
#define BOSONBENCH_NOISE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bosonbench/likelihood.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/samples.hpp"

namespace bb {

/// Imperfections the noisy generator can inject, mirroring the three
/// experimental noise sources: interferometer measurement error, double
/// photon emission, and dark counts.
enum class Imperfection { kMatrixNoise, kMultiphoton, kDarkCounts };

struct NoiseConfig {
  double x_true = 1.0;
  /// Per-event probability scale of a dark-count substitution.
  double dark_count_prob = 0.0;
  /// Per-mode double-emission probability.
  double multiphoton_prob = 0.0;
  /// Relative elementwise Gaussian perturbation of the sampling matrix.
  double matrix_noise_sigma = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
  /// Copy with the imperfections outside `active` switched off.
  NoiseConfig restricted_to(const std::vector<Imperfection>& active) const;
};

/// Draws `count` collision-free outcomes from the exact distribution
/// P_i(x)/N(x) by inverse CDF over the full enumeration. Refuses
/// binom(m, n) > 2e5. Deterministic per seed.
SampleSet exact_sampler(const TransmissionMatrix& u, const std::vector<int>& inputs, double x,
                        std::uint64_t count, std::uint64_t seed);

/// Metropolised independence sampler over collision-free patterns. The
/// proposal routes each photon independently by |U_jk|^2 (rejecting
/// collisions); the acceptance ratio corrects toward the partial-
/// distinguishability target at overlap x. Emits every `thinning`-th state
/// after `burn_in` steps. Refuses n > 9.
SampleSet mcmc_sampler(const TransmissionMatrix& u, const std::vector<int>& inputs, double x,
                       std::uint64_t count, std::uint64_t seed, std::uint64_t burn_in = 100,
                       std::uint64_t thinning = 10);

/// Adds independent Gaussian noise of standard deviation
/// sigma * RMS(|entries|) to each entry's real and imaginary part.
/// sigma = 0 returns the matrix unchanged.
TransmissionMatrix perturb_matrix(const TransmissionMatrix& u, double sigma, std::uint64_t seed);

/// Synthetic sampler with the full imperfection mixture: per event, a dark
/// count replaces one signal photon with a uniform spurious detection, a
/// multiphoton event replaces one signal photon with a distinguishable noise
/// photon from an occupied input mode, and clean events follow the ideal
/// distribution at x_true. Sampling runs on perturb_matrix(u, sigma);
/// analysis code should keep using the unperturbed matrix. Every emitted
/// sample has exactly n collision-free detections.
SampleSet generate_noisy_samples(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                 const NoiseConfig& cfg, std::uint64_t count);

/// One rung of the cumulative error budget.
struct BudgetRung {
  std::string label;
  std::vector<Imperfection> active;
};

struct BudgetRow {
  std::string label;
  double x_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  /// log10 of the likelihood of this rung's x_hat under the reference data,
  /// relative to the reference data's own maximum. Absent without a
  /// reference sample set.
  std::optional<double> rel_log10_likelihood;
};

/// Switches imperfections on cumulatively (each rung's set must contain the
/// previous rung's), generates `count` samples per rung at the strengths in
/// `strengths`, and estimates x on each rung's data with the unperturbed
/// matrix. The matrix perturbation is drawn once and shared by all rungs
/// that include it; rung event streams and the perturbation derive from
/// strengths.seed.
std::vector<BudgetRow> error_budget(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                    const NoiseConfig& strengths,
                                    const std::vector<BudgetRung>& ladder, std::uint64_t count,
                                    const SampleSet* reference = nullptr,
                                    const MleOptions& opts = {});

}  // namespace bb

#endif  // BOSONBENCH_NOISE_HPP
