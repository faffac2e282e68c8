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

#include "bosonbench/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bosonbench/combinatorics.hpp"
#include "bosonbench/errors.hpp"
#include "bosonbench/model.hpp"
#include "bosonbench/noise.hpp"
#include "bosonbench/parallel.hpp"
#include "bosonbench/rng.hpp"
#include "curve_internal.hpp"

namespace bb {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double horner(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

ProbabilityPolynomial pattern_poly(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                   const OutputPattern& pattern) {
  return outcome_poly(submatrix_columns(u, inputs, pattern));
}

/// Computes outcome polynomials for a list of patterns, fanning out over
/// workers. Each entry is independent, so the result is worker-count
/// invariant.
std::vector<ProbabilityPolynomial> polys_for_patterns(const TransmissionMatrix& u,
                                                      const std::vector<int>& inputs,
                                                      const std::vector<const OutputPattern*>& pats,
                                                      int workers) {
  std::vector<ProbabilityPolynomial> out(pats.size());
  parallel_chunks(pats.size(), 64, resolve_workers(workers),
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      out[i] = pattern_poly(u, inputs, *pats[i]);
                    }
                  });
  return out;
}

}  // namespace

double NormalizationPoly::value_at(double x) const { return horner(coeffs, x); }

double NormalizationPoly::stderr_at(double x) const {
  if (method == NormMethod::kExact) return 0.0;
  double s = 0.0;
  double xp = 1.0;
  for (double e : coeff_stderr) {
    s += e * xp;
    xp *= x;
  }
  return s;
}

NormalizationPoly normalization_exact(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                      int workers) {
  validate_modes(u, inputs);
  const int m = static_cast<int>(u.rows());
  const int n = static_cast<int>(inputs.size());
  binomial_checked(m, n, 200000);

  std::vector<OutputPattern> patterns;
  for_each_combination(m, n, [&](const std::vector<int>& c) { patterns.push_back(c); });
  std::vector<const OutputPattern*> ptrs(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) ptrs[i] = &patterns[i];
  const std::vector<ProbabilityPolynomial> polys = polys_for_patterns(u, inputs, ptrs, workers);

  NormalizationPoly norm;
  norm.method = NormMethod::kExact;
  norm.draws = 0;
  std::vector<long double> acc(static_cast<std::size_t>(n) + 1, 0.0L);
  for (const ProbabilityPolynomial& p : polys) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += static_cast<long double>(p.coeffs[k]);
  }
  norm.coeffs.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) norm.coeffs[k] = static_cast<double>(acc[k]);
  norm.coeff_stderr.assign(acc.size(), 0.0);
  return norm;
}

NormalizationPoly normalization_mc(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                   std::uint64_t draws, std::uint64_t seed, int workers) {
  validate_modes(u, inputs);
  const int m = static_cast<int>(u.rows());
  const int n = static_cast<int>(inputs.size());
  if (draws < 100) throw DomainError("Monte Carlo normalization needs at least 100 draws");

  // Draw all subsets up front from a single RNG stream, then evaluate their
  // polynomials in parallel; the result is identical at any worker count.
  Rng rng(seed);
  std::vector<OutputPattern> subsets;
  subsets.reserve(draws);
  for (std::uint64_t d = 0; d < draws; ++d) subsets.push_back(random_combination(m, n, rng));
  std::vector<const OutputPattern*> ptrs(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) ptrs[i] = &subsets[i];
  const std::vector<ProbabilityPolynomial> polys = polys_for_patterns(u, inputs, ptrs, workers);

  const std::size_t nc = static_cast<std::size_t>(n) + 1;
  std::vector<long double> sum(nc, 0.0L);
  std::vector<long double> sumsq(nc, 0.0L);
  for (const ProbabilityPolynomial& p : polys) {
    for (std::size_t k = 0; k < nc; ++k) {
      const long double c = static_cast<long double>(p.coeffs[k]);
      sum[k] += c;
      sumsq[k] += c * c;
    }
  }

  const double scale = binomial(m, n);
  const long double dd = static_cast<long double>(draws);
  NormalizationPoly norm;
  norm.method = NormMethod::kMonteCarlo;
  norm.draws = draws;
  norm.coeffs.resize(nc);
  norm.coeff_stderr.resize(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    const long double mean = sum[k] / dd;
    long double var = (sumsq[k] / dd - mean * mean) * dd / (dd - 1.0L);
    if (var < 0.0L) var = 0.0L;
    norm.coeffs[k] = scale * static_cast<double>(mean);
    norm.coeff_stderr[k] = scale * std::sqrt(static_cast<double>(var / dd));
  }
  return norm;
}

LogLikelihood::LogLikelihood(const SampleSet& samples, const TransmissionMatrix& u,
                             const std::vector<int>& inputs, NormalizationPoly norm, int workers)
    : LogLikelihood(
          [&samples, &u, &inputs] {
            samples.validate();
            if (static_cast<std::size_t>(samples.n) != inputs.size()) {
              throw DomainError("sample photon count " + std::to_string(samples.n) +
                                " does not match " + std::to_string(inputs.size()) +
                                " input modes");
            }
            if (static_cast<std::size_t>(samples.m) != u.rows()) {
              throw DimensionError("sample set declares " + std::to_string(samples.m) +
                                   " modes but the matrix has " + std::to_string(u.rows()));
            }
            CountMap counts;
            for (const OutputPattern& p : samples.patterns) ++counts[p];
            return counts;
          }(),
          u, inputs, std::move(norm), workers) {}

LogLikelihood::LogLikelihood(CountMap counts, const TransmissionMatrix& u,
                             const std::vector<int>& inputs, NormalizationPoly norm, int workers)
    : counts_(std::move(counts)), norm_(std::move(norm)) {
  validate_modes(u, inputs);
  std::vector<const OutputPattern*> ptrs;
  ptrs.reserve(counts_.size());
  for (const auto& [pattern, count] : counts_) {
    ptrs.push_back(&pattern);
    total_ += count;
  }
  const std::vector<ProbabilityPolynomial> polys = polys_for_patterns(u, inputs, ptrs, workers);
  std::size_t i = 0;
  for (const auto& [pattern, count] : counts_) {
    polys_.emplace(pattern, polys[i++]);
  }
}

double LogLikelihood::operator()(double x) const {
  return internal::eval_counts(counts_, polys_, norm_, total_, x);
}

namespace internal {

std::vector<double> make_grid(double step) {
  if (!(step >= 1e-6 && step <= 0.5)) {
    throw DomainError("grid step must lie in [1e-6, 0.5], got " + std::to_string(step));
  }
  const std::int64_t count = std::llround(1.0 / step);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count) + 1);
  for (std::int64_t g = 0; g < count; ++g) {
    const double x = static_cast<double>(g) * step;
    if (x >= 1.0) break;
    grid.push_back(x);
  }
  grid.push_back(1.0);
  return grid;
}

std::vector<double> log_norm_table(const NormalizationPoly& norm, const std::vector<double>& grid) {
  std::vector<double> table(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double nx = norm.value_at(grid[g]);
    table[g] = nx <= 0.0 ? kNegInf : std::log(nx);
  }
  return table;
}

double eval_counts(const LogLikelihood::CountMap& counts,
                   const std::map<OutputPattern, ProbabilityPolynomial>& polys,
                   const NormalizationPoly& norm, std::uint64_t sample_count, double x) {
  if (sample_count == 0) return 0.0;
  double acc = 0.0;
  for (const auto& [pattern, count] : counts) {
    const auto it = polys.find(pattern);
    if (it == polys.end()) throw Error("polynomial cache is missing an observed pattern");
    const double p = eval_poly(it->second, x);
    if (p <= 0.0) return kNegInf;
    acc += static_cast<double>(count) * std::log(p);
  }
  const double nx = norm.value_at(x);
  if (nx <= 0.0) return kNegInf;
  acc -= static_cast<double>(sample_count) * std::log(nx);
  return acc;
}

void sum_tables(const LogLikelihood::CountMap& counts,
                const std::map<OutputPattern, ProbabilityPolynomial>& polys,
                const std::vector<double>& grid, std::vector<double>& finite_sum,
                std::vector<std::int64_t>& neginf_count) {
  finite_sum.assign(grid.size(), 0.0);
  neginf_count.assign(grid.size(), 0);
  for (const auto& [pattern, count] : counts) {
    const auto it = polys.find(pattern);
    if (it == polys.end()) throw Error("polynomial cache is missing an observed pattern");
    const ProbabilityPolynomial& poly = it->second;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double p = eval_poly(poly, grid[g]);
      if (p <= 0.0) {
        neginf_count[g] += static_cast<std::int64_t>(count);
      } else {
        finite_sum[g] += static_cast<double>(count) * std::log(p);
      }
    }
  }
}

void add_sample(const ProbabilityPolynomial& poly, const std::vector<double>& grid, int sign,
                std::vector<double>& finite_sum, std::vector<std::int64_t>& neginf_count) {
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double p = eval_poly(poly, grid[g]);
    if (p <= 0.0) {
      neginf_count[g] += sign;
    } else {
      finite_sum[g] += static_cast<double>(sign) * std::log(p);
    }
  }
}

std::vector<double> apply_norm(const std::vector<double>& finite_sum,
                               const std::vector<std::int64_t>& neginf_count,
                               const std::vector<double>& log_norm, std::uint64_t sample_count) {
  std::vector<double> ell(finite_sum.size());
  for (std::size_t g = 0; g < finite_sum.size(); ++g) {
    if (neginf_count[g] > 0 || std::isinf(log_norm[g])) {
      ell[g] = kNegInf;
    } else {
      ell[g] = finite_sum[g] - static_cast<double>(sample_count) * log_norm[g];
    }
  }
  return ell;
}

EstimateReport optimize_scanned_curve(const std::vector<double>& grid,
                                      const std::vector<double>& ell,
                                      const std::function<double(double)>& eval,
                                      const NormalizationPoly& norm, std::uint64_t sample_count,
                                      const MleOptions& opts) {
  if (!(opts.rel_lik_threshold > 0.0 && opts.rel_lik_threshold < 1.0)) {
    throw DomainError("relative likelihood threshold must lie in (0, 1)");
  }

  EstimateReport report;
  report.sample_count = sample_count;
  report.rel_lik_threshold = opts.rel_lik_threshold;
  report.loglik_curve.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) report.loglik_curve.emplace_back(grid[g], ell[g]);

  std::size_t gmax = grid.size();
  double fmax = kNegInf;
  double fmin = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (std::isinf(ell[g])) continue;
    if (ell[g] > fmax) {
      fmax = ell[g];
      gmax = g;
    }
    if (ell[g] < fmin) fmin = ell[g];
  }
  if (gmax == grid.size()) {
    throw Error("log-likelihood is -inf at every grid point; the samples are impossible "
                "under this matrix and input selection");
  }

  // Finite part flat within accumulation tolerance: the data carry no
  // information about x (e.g. a single collision-free outcome).
  if (fmax - fmin <= 1e-9 * std::max(1.0, std::abs(fmax))) {
    report.flat = true;
    report.x_hat = grid[gmax];
    report.x_hat_loglik = fmax;
    report.ci_low = 0.0;
    report.ci_high = 1.0;
    const double nx = norm.value_at(report.x_hat);
    report.collision_fraction = 1.0 - nx;
    report.norm_correction = nx > 0.0 ? 1.0 / nx : std::numeric_limits<double>::infinity();
    return report;
  }

  // Golden-section refinement inside the bracket around the best grid point.
  double a = grid[gmax > 0 ? gmax - 1 : 0];
  double b = grid[gmax + 1 < grid.size() ? gmax + 1 : gmax];
  constexpr double kGolden = 0.6180339887498949;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > 1e-6) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = eval(d);
    }
  }
  const double x_ref = 0.5 * (a + b);
  const double f_ref = eval(x_ref);
  if (f_ref >= fmax) {
    report.x_hat = x_ref;
    report.x_hat_loglik = f_ref;
  } else {
    report.x_hat = grid[gmax];
    report.x_hat_loglik = fmax;
  }

  // CI: outermost grid crossings of ell >= ell(x_hat) + log(threshold),
  // linearly interpolated. A -inf neighbor cannot be interpolated; the
  // crossing then sits on the first qualifying grid point.
  const double cut = report.x_hat_loglik + std::log(opts.rel_lik_threshold);
  double ci_low = report.x_hat;
  double ci_high = report.x_hat;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (std::isinf(ell[g]) || ell[g] < cut) continue;
    if (g == 0 || std::isinf(ell[g - 1])) {
      ci_low = grid[g];
    } else {
      const double t = (cut - ell[g - 1]) / (ell[g] - ell[g - 1]);
      ci_low = grid[g - 1] + t * (grid[g] - grid[g - 1]);
    }
    break;
  }
  for (std::size_t g = grid.size(); g-- > 0;) {
    if (std::isinf(ell[g]) || ell[g] < cut) continue;
    if (g + 1 == grid.size() || std::isinf(ell[g + 1])) {
      ci_high = grid[g];
    } else {
      const double t = (cut - ell[g + 1]) / (ell[g] - ell[g + 1]);
      ci_high = grid[g + 1] - t * (grid[g + 1] - grid[g]);
    }
    break;
  }
  report.ci_low = std::min(ci_low, report.x_hat);
  report.ci_high = std::max(ci_high, report.x_hat);

  const double nx = norm.value_at(report.x_hat);
  report.collision_fraction = 1.0 - nx;
  report.norm_correction = nx > 0.0 ? 1.0 / nx : std::numeric_limits<double>::infinity();

  if (norm.method == NormMethod::kMonteCarlo && nx > 0.0 && sample_count > 0) {
    // Normalization noise shifts ell by about K * sigma_N / N; translate
    // that into an x offset through the local curvature.
    const double h = 1e-4;
    const double x0 = std::min(std::max(report.x_hat, h), 1.0 - h);
    const double d2 = (eval(x0 + h) - 2.0 * eval(x0) + eval(x0 - h)) / (h * h);
    if (std::isfinite(d2) && d2 < 0.0) {
      const double dl = static_cast<double>(sample_count) * norm.stderr_at(report.x_hat) / nx;
      report.mc_inflation = std::sqrt(2.0 * dl / -d2);
    }
  }
  return report;
}

}  // namespace internal

EstimateReport mle_estimate_curve(const LogLikelihood& loglik, const MleOptions& opts) {
  if (loglik.sample_count() == 0) throw DomainError("cannot estimate x from zero samples");
  const std::vector<double> grid = internal::make_grid(opts.grid_step);
  std::vector<double> finite_sum;
  std::vector<std::int64_t> neginf_count;
  internal::sum_tables(loglik.counts(), loglik.polynomials(), grid, finite_sum, neginf_count);
  const std::vector<double> log_norm = internal::log_norm_table(loglik.norm(), grid);
  const std::vector<double> ell =
      internal::apply_norm(finite_sum, neginf_count, log_norm, loglik.sample_count());
  return internal::optimize_scanned_curve(
      grid, ell, [&loglik](double x) { return loglik(x); }, loglik.norm(), loglik.sample_count(),
      opts);
}

EstimateReport mle_estimate(const SampleSet& samples, const TransmissionMatrix& u,
                            const std::vector<int>& inputs, const MleOptions& opts) {
  if (samples.patterns.empty()) throw DomainError("cannot estimate x from zero samples");
  NormalizationPoly norm = opts.norm_method == NormMethod::kExact
                               ? normalization_exact(u, inputs, opts.workers)
                               : normalization_mc(u, inputs, opts.mc_draws, opts.seed,
                                                  opts.workers);
  LogLikelihood loglik(samples, u, inputs, std::move(norm), opts.workers);
  return mle_estimate_curve(loglik, opts);
}

std::vector<AccuracyRow> accuracy_benchmark(const std::vector<int>& n_list,
                                            const TransmissionMatrix& u,
                                            const std::vector<int>& inputs,
                                            std::uint64_t samples_per_n, double x_true,
                                            std::uint64_t seed, const MleOptions& opts) {
  if (n_list.empty()) throw DomainError("accuracy benchmark needs at least one photon count");
  std::vector<AccuracyRow> rows;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const int n = n_list[i];
    if (n < 1 || static_cast<std::size_t>(n) > inputs.size()) {
      throw DomainError("photon count " + std::to_string(n) +
                        " outside the provided input-mode list");
    }
    const std::vector<int> sub_inputs(inputs.begin(), inputs.begin() + n);
    const SampleSet samples =
        exact_sampler(u, sub_inputs, x_true, samples_per_n, derive_seed(seed, i));
    const EstimateReport report = mle_estimate(samples, u, sub_inputs, opts);
    AccuracyRow row;
    row.n = n;
    row.x_hat = report.x_hat;
    row.ci_low = report.ci_low;
    row.ci_high = report.ci_high;
    row.ci_width = report.ci_high - report.ci_low;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bb
