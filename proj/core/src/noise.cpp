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

#include "bosonbench/noise.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "bosonbench/combinatorics.hpp"
#include "bosonbench/errors.hpp"
#include "bosonbench/model.hpp"
#include "bosonbench/permanent.hpp"
#include "bosonbench/rng.hpp"

namespace bb {

namespace {

/// Inverse-CDF sampler over the full collision-free outcome enumeration.
struct ExactTable {
  std::vector<OutputPattern> patterns;
  std::vector<double> cdf;

  const OutputPattern& draw(Rng& rng) const {
    const double u = rng.uniform() * cdf.back();
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (idx >= patterns.size()) idx = patterns.size() - 1;
    return patterns[idx];
  }
};

ExactTable build_exact_table(const TransmissionMatrix& u, const std::vector<int>& inputs,
                             double x) {
  validate_modes(u, inputs);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("overlap x must lie in [0, 1], got " + std::to_string(x));
  }
  const int m = static_cast<int>(u.rows());
  const int n = static_cast<int>(inputs.size());
  binomial_checked(m, n, 200000);

  ExactTable table;
  double cum = 0.0;
  for_each_combination(m, n, [&](const std::vector<int>& pattern) {
    const double w =
        std::max(0.0, eval_poly(outcome_poly(submatrix_columns(u, inputs, pattern)), x));
    cum += w;
    table.patterns.push_back(pattern);
    table.cdf.push_back(cum);
  });
  if (!(cum > 0.0)) {
    throw Error("no collision-free outcome has positive probability for this configuration");
  }
  return table;
}

/// Per-photon output routing CDF from one matrix row of |entries|^2.
std::vector<double> row_cdf(const TransmissionMatrix& u, int row) {
  std::vector<double> cdf(u.cols());
  double cum = 0.0;
  for (std::size_t k = 0; k < u.cols(); ++k) {
    cum += std::norm(u.at(static_cast<std::size_t>(row), k));
    cdf[k] = cum;
  }
  if (!(cum > 0.0)) {
    throw Error("matrix row " + std::to_string(row) + " carries no transmission");
  }
  return cdf;
}

int draw_from_cdf(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform() * cdf.back();
  std::size_t idx =
      static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  if (idx >= cdf.size()) idx = cdf.size() - 1;
  return static_cast<int>(idx);
}

}  // namespace

void NoiseConfig::validate() const {
  if (!(x_true >= 0.0 && x_true <= 1.0)) {
    throw ConfigError("x_true must lie in [0, 1]");
  }
  if (!(dark_count_prob >= 0.0 && dark_count_prob <= 1.0)) {
    throw ConfigError("dark_count_prob must lie in [0, 1]");
  }
  if (!(multiphoton_prob >= 0.0 && multiphoton_prob <= 1.0)) {
    throw ConfigError("multiphoton_prob must lie in [0, 1]");
  }
  if (!(matrix_noise_sigma >= 0.0)) {
    throw ConfigError("matrix_noise_sigma must be nonnegative");
  }
}

NoiseConfig NoiseConfig::restricted_to(const std::vector<Imperfection>& active) const {
  NoiseConfig out = *this;
  auto on = [&active](Imperfection imp) {
    return std::find(active.begin(), active.end(), imp) != active.end();
  };
  if (!on(Imperfection::kMatrixNoise)) out.matrix_noise_sigma = 0.0;
  if (!on(Imperfection::kMultiphoton)) out.multiphoton_prob = 0.0;
  if (!on(Imperfection::kDarkCounts)) out.dark_count_prob = 0.0;
  return out;
}

SampleSet exact_sampler(const TransmissionMatrix& u, const std::vector<int>& inputs, double x,
                        std::uint64_t count, std::uint64_t seed) {
  const ExactTable table = build_exact_table(u, inputs, x);
  Rng rng(seed);
  SampleSet out;
  out.n = static_cast<int>(inputs.size());
  out.m = static_cast<int>(u.rows());
  out.patterns.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.patterns.push_back(table.draw(rng));
  return out;
}

SampleSet mcmc_sampler(const TransmissionMatrix& u, const std::vector<int>& inputs, double x,
                       std::uint64_t count, std::uint64_t seed, std::uint64_t burn_in,
                       std::uint64_t thinning) {
  validate_modes(u, inputs);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("overlap x must lie in [0, 1], got " + std::to_string(x));
  }
  const std::size_t n = inputs.size();
  if (n > 9) {
    throw SizeError("mcmc_sampler evaluates n! outcome polynomials and refuses n > 9");
  }
  if (thinning < 1) throw DomainError("thinning must be at least 1");

  std::vector<std::vector<double>> routing(n);
  for (std::size_t j = 0; j < n; ++j) routing[j] = row_cdf(u, inputs[j]);

  Rng rng(seed);
  auto propose = [&]() {
    OutputPattern outs(n);
    while (true) {
      for (std::size_t j = 0; j < n; ++j) outs[j] = draw_from_cdf(routing[j], rng);
      std::sort(outs.begin(), outs.end());
      bool collision = false;
      for (std::size_t j = 1; j < n; ++j) {
        if (outs[j] == outs[j - 1]) {
          collision = true;
          break;
        }
      }
      if (!collision) return outs;
    }
  };

  // Target weight p (partially distinguishable) and proposal weight q
  // (distinguishable routing, whose permanent normalization cancels in the
  // acceptance ratio) per pattern, cached for the run.
  std::map<OutputPattern, std::pair<double, double>> cache;
  auto lookup = [&](const OutputPattern& pattern) -> const std::pair<double, double>& {
    auto it = cache.find(pattern);
    if (it == cache.end()) {
      const ComplexMatrix sub = submatrix_columns(u, inputs, pattern);
      const double p = std::max(0.0, eval_poly(outcome_poly(sub), x));
      const double q = distinguishable_probability(sub);
      it = cache.emplace(pattern, std::make_pair(p, q)).first;
    }
    return it->second;
  };

  OutputPattern state = propose();
  for (std::uint64_t tries = 0; lookup(state).first <= 0.0; ++tries) {
    if (tries > 100000) {
      throw Error("could not find a start state with positive probability");
    }
    state = propose();
  }

  auto step = [&]() {
    const OutputPattern prop = propose();
    const auto [pp, qp] = lookup(prop);
    const auto [pc, qc] = lookup(state);
    if (pp <= 0.0 || qp <= 0.0) return;
    const double alpha = (pp * qc) / (pc * qp);
    if (alpha >= 1.0 || rng.uniform() < alpha) state = prop;
  };

  for (std::uint64_t b = 0; b < burn_in; ++b) step();
  SampleSet out;
  out.n = static_cast<int>(n);
  out.m = static_cast<int>(u.rows());
  out.patterns.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    for (std::uint64_t t = 0; t < thinning; ++t) step();
    out.patterns.push_back(state);
  }
  return out;
}

TransmissionMatrix perturb_matrix(const TransmissionMatrix& u, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw DomainError("perturbation sigma must be nonnegative");
  TransmissionMatrix out = u;
  if (sigma == 0.0 || u.empty()) return out;
  double sumsq = 0.0;
  for (const Complex& z : u.data()) sumsq += std::norm(z);
  const double rms = std::sqrt(sumsq / static_cast<double>(u.data().size()));
  const double sd = sigma * rms;
  Rng rng(seed);
  for (Complex& z : out.data()) {
    z = Complex(z.real() + sd * rng.gaussian(), z.imag() + sd * rng.gaussian());
  }
  return out;
}

SampleSet generate_noisy_samples(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                 const NoiseConfig& cfg, std::uint64_t count) {
  cfg.validate();
  validate_modes(u, inputs);
  const int m = static_cast<int>(u.rows());
  const int n = static_cast<int>(inputs.size());
  // Dark counts are quoted per event, double emission per occupied mode.
  const double w_dark = cfg.dark_count_prob;
  const double w_multi = static_cast<double>(n) * cfg.multiphoton_prob;
  if (w_dark + w_multi > 1.0) {
    throw ConfigError("dark and multiphoton rates leave no probability for clean events (dark "
                      "+ n * multi > 1)");
  }

  // The device is simulated on a perturbed copy of the matrix; estimation
  // downstream keeps the measured one. One perturbation per dataset.
  const TransmissionMatrix up = perturb_matrix(u, cfg.matrix_noise_sigma, derive_seed(cfg.seed, 0));

  const ExactTable clean = build_exact_table(up, inputs, cfg.x_true);
  // Signal tables with one source removed, built on first use. Construction
  // consumes no randomness, so laziness does not disturb the event stream.
  std::vector<std::unique_ptr<ExactTable>> dropped(static_cast<std::size_t>(n));
  auto dropped_table = [&](std::size_t d) -> const ExactTable& {
    if (!dropped[d]) {
      std::vector<int> sub;
      for (std::size_t j = 0; j < inputs.size(); ++j) {
        if (j != d) sub.push_back(inputs[j]);
      }
      dropped[d] = std::make_unique<ExactTable>(build_exact_table(up, sub, cfg.x_true));
    }
    return *dropped[d];
  };
  std::vector<std::vector<double>> noise_routing(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < inputs.size(); ++j) noise_routing[j] = row_cdf(up, inputs[j]);

  Rng rng(derive_seed(cfg.seed, 1));
  SampleSet out;
  out.n = n;
  out.m = m;
  out.patterns.reserve(count);

  auto draw_signal = [&](std::size_t d) -> OutputPattern {
    if (n == 1) return {};
    return dropped_table(d).draw(rng);
  };

  for (std::uint64_t e = 0; e < count; ++e) {
    const double t = rng.uniform();
    if (t < w_dark) {
      // One detection is a dark count: n-1 real photons plus a uniformly
      // placed spurious click on a free detector.
      const std::size_t d = static_cast<std::size_t>(rng.uniform_below(
          static_cast<std::uint64_t>(n)));
      OutputPattern pattern = draw_signal(d);
      const int free_count = m - static_cast<int>(pattern.size());
      int r = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(free_count)));
      int dark_mode = 0;
      for (int k = 0; k < m; ++k) {
        if (std::binary_search(pattern.begin(), pattern.end(), k)) continue;
        if (r == 0) {
          dark_mode = k;
          break;
        }
        --r;
      }
      pattern.push_back(dark_mode);
      std::sort(pattern.begin(), pattern.end());
      out.patterns.push_back(std::move(pattern));
    } else if (t < w_dark + w_multi) {
      // Double emission elsewhere plus a lost photon: n-1 signal photons and
      // one fully distinguishable extra photon from an occupied input.
      const std::size_t d = static_cast<std::size_t>(rng.uniform_below(
          static_cast<std::uint64_t>(n)));
      const std::size_t a = static_cast<std::size_t>(rng.uniform_below(
          static_cast<std::uint64_t>(n)));
      OutputPattern pattern = draw_signal(d);
      int k = 0;
      for (std::uint64_t tries = 0;; ++tries) {
        if (tries > 1000000) {
          throw Error("noise photon routing failed to find a free detector");
        }
        k = draw_from_cdf(noise_routing[a], rng);
        if (!std::binary_search(pattern.begin(), pattern.end(), k)) break;
      }
      pattern.push_back(k);
      std::sort(pattern.begin(), pattern.end());
      out.patterns.push_back(std::move(pattern));
    } else {
      out.patterns.push_back(clean.draw(rng));
    }
  }
  return out;
}

std::vector<BudgetRow> error_budget(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                    const NoiseConfig& strengths,
                                    const std::vector<BudgetRung>& ladder, std::uint64_t count,
                                    const SampleSet* reference, const MleOptions& opts) {
  strengths.validate();
  if (ladder.empty()) throw ConfigError("error budget needs at least one ladder rung");
  auto rung_mask = [](const BudgetRung& rung) {
    unsigned mask = 0;
    for (Imperfection imp : rung.active) mask |= 1u << static_cast<unsigned>(imp);
    return mask;
  };
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    const unsigned prev = rung_mask(ladder[i - 1]);
    const unsigned cur = rung_mask(ladder[i]);
    if ((prev & cur) != prev) {
      throw ConfigError("ladder rung '" + ladder[i].label +
                        "' drops an imperfection from the previous rung; rungs must be "
                        "cumulative");
    }
  }

  std::unique_ptr<LogLikelihood> ref_loglik;
  double ref_max_loglik = 0.0;
  if (reference != nullptr) {
    NormalizationPoly norm = opts.norm_method == NormMethod::kExact
                                 ? normalization_exact(u, inputs, opts.workers)
                                 : normalization_mc(u, inputs, opts.mc_draws, opts.seed,
                                                    opts.workers);
    ref_loglik = std::make_unique<LogLikelihood>(*reference, u, inputs, std::move(norm),
                                                 opts.workers);
    ref_max_loglik = mle_estimate_curve(*ref_loglik, opts).x_hat_loglik;
  }

  // One device-matrix perturbation per budget. Every rung that models
  // misspecification samples from the same realization, so consecutive rows
  // differ only by the imperfection switched on between them.
  const TransmissionMatrix u_dev =
      perturb_matrix(u, strengths.matrix_noise_sigma, derive_seed(strengths.seed, 0));

  std::vector<BudgetRow> rows;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    NoiseConfig cfg = strengths.restricted_to(ladder[i].active);
    const bool misspecified = cfg.matrix_noise_sigma > 0.0;
    cfg.matrix_noise_sigma = 0.0;
    cfg.seed = derive_seed(strengths.seed, i + 1);
    const SampleSet samples =
        generate_noisy_samples(misspecified ? u_dev : u, inputs, cfg, count);
    const EstimateReport report = mle_estimate(samples, u, inputs, opts);
    BudgetRow row;
    row.label = ladder[i].label;
    row.x_hat = report.x_hat;
    row.ci_low = report.ci_low;
    row.ci_high = report.ci_high;
    if (ref_loglik) {
      row.rel_log10_likelihood = ((*ref_loglik)(report.x_hat) - ref_max_loglik) / std::log(10.0);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bb
