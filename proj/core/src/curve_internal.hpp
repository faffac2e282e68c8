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

// Shared internals of the likelihood optimizer. The stream monitor reuses
// these so that a window evaluated through its incremental state produces
// bit-identical reports to a standalone mle_estimate over the same samples.

#ifndef BOSONBENCH_CURVE_INTERNAL_HPP
#define BOSONBENCH_CURVE_INTERNAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "bosonbench/likelihood.hpp"
#include "bosonbench/polynomial.hpp"

namespace bb::internal {

/// Grid over [0, 1] at the given step, last point pinned to exactly 1.0.
std::vector<double> make_grid(double step);

/// log N(x_g) for every grid point; -inf where N vanishes.
std::vector<double> log_norm_table(const NormalizationPoly& norm, const std::vector<double>& grid);

/// ell(x) before adding the grid machinery: multiplicity-weighted sum of
/// log P over the count map (lexicographic order) minus K log N. Returns
/// -inf as soon as any observed pattern has zero probability.
double eval_counts(const LogLikelihood::CountMap& counts,
                   const std::map<OutputPattern, ProbabilityPolynomial>& polys,
                   const NormalizationPoly& norm, std::uint64_t sample_count, double x);

/// Fills finite_sum[g] with the weighted sum of log P_i(x_g) over patterns
/// where P_i(x_g) > 0 and neginf_count[g] with the number of samples whose
/// pattern is impossible at x_g. Pattern order is the count map's
/// lexicographic order, so independent resummations agree bitwise.
void sum_tables(const LogLikelihood::CountMap& counts,
                const std::map<OutputPattern, ProbabilityPolynomial>& polys,
                const std::vector<double>& grid, std::vector<double>& finite_sum,
                std::vector<std::int64_t>& neginf_count);

/// Adds (sign = +1) or removes (sign = -1) one sample's contribution from
/// the running sums. The monitor's incremental window advance.
void add_sample(const ProbabilityPolynomial& poly, const std::vector<double>& grid, int sign,
                std::vector<double>& finite_sum, std::vector<std::int64_t>& neginf_count);

/// ell[g] = -inf when any sample is impossible there (or N <= 0), otherwise
/// finite_sum[g] - K * log_norm[g].
std::vector<double> apply_norm(const std::vector<double>& finite_sum,
                               const std::vector<std::int64_t>& neginf_count,
                               const std::vector<double>& log_norm, std::uint64_t sample_count);

/// Argmax + golden-section refinement + relative-likelihood CI over a
/// scanned curve. `eval` must evaluate the same ell at arbitrary x.
EstimateReport optimize_scanned_curve(const std::vector<double>& grid,
                                      const std::vector<double>& ell,
                                      const std::function<double(double)>& eval,
                                      const NormalizationPoly& norm, std::uint64_t sample_count,
                                      const MleOptions& opts);

}  // namespace bb::internal

#endif  // BOSONBENCH_CURVE_INTERNAL_HPP
