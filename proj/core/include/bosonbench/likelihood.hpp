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

#ifndef BOSONBENCH_LIKELIHOOD_HPP
#define BOSONBENCH_LIKELIHOOD_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bosonbench/matrix.hpp"
#include "bosonbench/polynomial.hpp"
#include "bosonbench/samples.hpp"

namespace bb {

enum class NormMethod { kExact, kMonteCarlo };

/// N(x) = sum of P_i(x) over all collision-free outcomes. The likelihood
/// divides each outcome probability by N(x); the collision fraction is
/// 1 - N(x) and the correction factor 1/N(x).
struct NormalizationPoly {
  std::vector<double> coeffs;
  /// Per-coefficient standard error; all zero for the exact method.
  std::vector<double> coeff_stderr;
  NormMethod method = NormMethod::kExact;
  std::uint64_t draws = 0;

  double value_at(double x) const;
  /// Triangle-inequality bound on the standard error of N(x); zero for exact.
  double stderr_at(double x) const;
};

/// Exact N(x) by enumerating every collision-free output pattern. Refuses
/// binom(m, n) > 2e5; use normalization_mc beyond that.
NormalizationPoly normalization_exact(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                      int workers = 0);

/// Monte Carlo N(x): averages outcome polynomials over `draws` uniform
/// collision-free patterns and scales by binom(m, n). Reports per-coefficient
/// standard errors. Deterministic per seed at any worker count.
NormalizationPoly normalization_mc(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                   std::uint64_t draws, std::uint64_t seed, int workers = 0);

/// The log-likelihood curve ell(x) = sum_i w_i log P_i(x) - K log N(x),
/// with one polynomial per distinct pattern (duplicates carry multiplicity
/// weights w_i). Any P_i(x) = 0 makes ell(x) = -inf at that x.
class LogLikelihood {
 public:
  /// Multiplicity-weighted pattern counts in lexicographic key order. The
  /// evaluation order is pinned by this map so that independently built
  /// curves over the same data agree bitwise.
  using CountMap = std::map<OutputPattern, std::uint64_t>;

  LogLikelihood(const SampleSet& samples, const TransmissionMatrix& u,
                const std::vector<int>& inputs, NormalizationPoly norm, int workers = 0);
  LogLikelihood(CountMap counts, const TransmissionMatrix& u, const std::vector<int>& inputs,
                NormalizationPoly norm, int workers = 0);

  double operator()(double x) const;

  std::uint64_t sample_count() const { return total_; }
  const CountMap& counts() const { return counts_; }
  const NormalizationPoly& norm() const { return norm_; }
  const std::map<OutputPattern, ProbabilityPolynomial>& polynomials() const { return polys_; }

 private:
  CountMap counts_;
  std::map<OutputPattern, ProbabilityPolynomial> polys_;
  NormalizationPoly norm_;
  std::uint64_t total_ = 0;
};

struct MleOptions {
  double grid_step = 1e-3;
  double rel_lik_threshold = 0.05;
  NormMethod norm_method = NormMethod::kExact;
  std::uint64_t mc_draws = 10000;
  std::uint64_t seed = 0;
  int workers = 0;
};

struct EstimateReport {
  double x_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double x_hat_loglik = 0.0;
  /// Grid samples of the log-likelihood; -inf where any outcome is
  /// impossible under the model.
  std::vector<std::pair<double, double>> loglik_curve;
  std::uint64_t sample_count = 0;
  double rel_lik_threshold = 0.05;
  /// Set when the curve carries no information; then ci = [0, 1].
  bool flat = false;
  /// 1 - N(x_hat) and 1/N(x_hat) diagnostics.
  double collision_fraction = 0.0;
  double norm_correction = 1.0;
  /// Extra x_hat uncertainty from Monte Carlo normalization noise; zero for
  /// the exact method.
  double mc_inflation = 0.0;
};

/// Maximum-likelihood x: grid scan at opts.grid_step over [0, 1], then
/// golden-section refinement of the best bracket to |dx| < 1e-6. The CI is
/// the outermost pair of grid crossings of relative likelihood
/// rel_lik_threshold, linearly interpolated.
EstimateReport mle_estimate(const SampleSet& samples, const TransmissionMatrix& u,
                            const std::vector<int>& inputs, const MleOptions& opts = {});

/// As mle_estimate but reusing an already-built curve (the monitor shares
/// pattern polynomials and the normalization across windows this way).
EstimateReport mle_estimate_curve(const LogLikelihood& loglik, const MleOptions& opts = {});

struct AccuracyRow {
  int n = 0;
  double x_hat = 0.0;
  double ci_width = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
};

/// Simulates samples_per_n events at x_true for each n (feeding the first n
/// entries of `inputs`), estimates x, and reports CI widths. Demonstrates
/// that the estimator tightens as the photon number grows.
std::vector<AccuracyRow> accuracy_benchmark(const std::vector<int>& n_list,
                                            const TransmissionMatrix& u,
                                            const std::vector<int>& inputs,
                                            std::uint64_t samples_per_n, double x_true,
                                            std::uint64_t seed, const MleOptions& opts = {});

}  // namespace bb

#endif  // BOSONBENCH_LIKELIHOOD_HPP
