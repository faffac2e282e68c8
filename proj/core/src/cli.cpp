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

#include "bosonbench/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <string>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "bosonbench/errors.hpp"
#include "bosonbench/io.hpp"
#include "bosonbench/likelihood.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/monitor.hpp"
#include "bosonbench/noise.hpp"
#include "bosonbench/version.hpp"

namespace bb {

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    int value = 0;
    const auto res = std::from_chars(text.data() + pos, text.data() + comma, value);
    if (res.ec != std::errc() || res.ptr != text.data() + comma || pos == comma) {
      throw ConfigError(what + ": '" + text.substr(pos, comma - pos) + "' is not an integer");
    }
    out.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError(what + " must not be empty");
  return out;
}

std::vector<int> parse_mode_list(const std::string& text) {
  std::vector<int> modes = parse_int_list(text, "--inputs");
  std::sort(modes.begin(), modes.end());
  for (std::size_t i = 1; i < modes.size(); ++i) {
    if (modes[i] == modes[i - 1]) {
      throw ConfigError("--inputs lists mode " + std::to_string(modes[i]) + " twice");
    }
  }
  return modes;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

NormMethod parse_norm_method(const std::string& text) {
  if (text == "exact") return NormMethod::kExact;
  if (text == "mc" || text == "monte-carlo") return NormMethod::kMonteCarlo;
  throw ConfigError("--norm must be 'exact' or 'mc', got '" + text + "'");
}

TransmissionMatrix load_matrix_with_diagnostic(const std::string& path) {
  TransmissionMatrix u = load_matrix(path);
  std::cerr << "# " << path << ": m = " << u.rows()
            << ", unitarity deviation = " << format_double(unitarity_deviation(u)) << "\n";
  return u;
}

void add_input_digest(RunManifest& manifest, const std::string& path) {
  manifest.input_digests[path] = digest_hex(read_file(path));
}

json report_to_json(const EstimateReport& report, double unitarity_dev) {
  json j;
  j["x_hat"] = report.x_hat;
  j["ci_low"] = report.ci_low;
  j["ci_high"] = report.ci_high;
  j["x_hat_loglik"] = report.x_hat_loglik;
  j["sample_count"] = report.sample_count;
  j["rel_lik_threshold"] = report.rel_lik_threshold;
  j["flat"] = report.flat;
  j["collision_fraction"] = report.collision_fraction;
  j["norm_correction"] = report.norm_correction;
  j["mc_inflation"] = report.mc_inflation;
  j["unitarity_deviation"] = unitarity_dev;
  return j;
}

std::string curve_to_csv(const EstimateReport& report) {
  std::string csv = "x,loglik\n";
  for (const auto& [x, ell] : report.loglik_curve) {
    csv += format_double(x);
    csv += ',';
    csv += format_double(ell);
    csv += '\n';
  }
  return csv;
}

std::string monitor_record(const MonitorPoint& point) {
  json j;
  j["index"] = point.index;
  j["x_hat"] = point.x_hat;
  j["ci_low"] = point.ci_low;
  j["ci_high"] = point.ci_high;
  return j.dump();
}

/// Options shared by estimate and curve.
struct EstimateArgs {
  std::string samples;
  std::string matrix;
  std::string inputs;
  std::string out;
  std::string norm = "exact";
  double threshold = 0.05;
  double grid_step = 1e-3;
  std::uint64_t draws = 10000;
  std::uint64_t seed = 0;
  int workers = 0;
};

void add_estimate_options(CLI::App* cmd, EstimateArgs& a) {
  cmd->add_option("--samples", a.samples, "sample file, one event per line")->required();
  cmd->add_option("--matrix", a.matrix, "transmission matrix JSON file")->required();
  cmd->add_option("--inputs", a.inputs, "comma-separated occupied input modes")->required();
  cmd->add_option("--norm", a.norm, "normalization method: exact or mc");
  cmd->add_option("--draws", a.draws, "Monte Carlo normalization draws");
  cmd->add_option("--threshold", a.threshold, "relative likelihood CI threshold");
  cmd->add_option("--grid-step", a.grid_step, "likelihood grid step");
  cmd->add_option("--seed", a.seed, "RNG seed for Monte Carlo normalization");
  cmd->add_option("--workers", a.workers, "worker threads (0 = all cores)");
  cmd->add_option("--out", a.out, "output path prefix");
}

RunManifest estimate_manifest(const std::string& command, const EstimateArgs& a,
                              const std::vector<int>& inputs) {
  RunManifest manifest;
  manifest.command = command;
  manifest.version = kVersion;
  manifest.parameters["--samples"] = a.samples;
  manifest.parameters["--matrix"] = a.matrix;
  manifest.parameters["--inputs"] = join_ints(inputs);
  manifest.parameters["--norm"] = a.norm;
  manifest.parameters["--draws"] = std::to_string(a.draws);
  manifest.parameters["--threshold"] = format_double(a.threshold);
  manifest.parameters["--grid-step"] = format_double(a.grid_step);
  manifest.parameters["--seed"] = std::to_string(a.seed);
  manifest.parameters["--workers"] = std::to_string(a.workers);
  manifest.parameters["--out"] = a.out;
  add_input_digest(manifest, a.samples);
  add_input_digest(manifest, a.matrix);
  return manifest;
}

void run_estimate(const EstimateArgs& a, bool curve_only) {
  const TransmissionMatrix u = load_matrix_with_diagnostic(a.matrix);
  const SampleSet samples = load_samples(a.samples, static_cast<int>(u.rows()));
  const std::vector<int> inputs = parse_mode_list(a.inputs);
  MleOptions opts;
  opts.grid_step = a.grid_step;
  opts.rel_lik_threshold = a.threshold;
  opts.norm_method = parse_norm_method(a.norm);
  opts.mc_draws = a.draws;
  opts.seed = a.seed;
  opts.workers = a.workers;
  const EstimateReport report = mle_estimate(samples, u, inputs, opts);

  write_file(a.out + ".curve.csv", curve_to_csv(report));
  if (!curve_only) {
    write_file(a.out + ".json", report_to_json(report, unitarity_deviation(u)).dump(2) + "\n");
    std::cout << "x_hat = " << format_double(report.x_hat) << " ci = ["
              << format_double(report.ci_low) << ", " << format_double(report.ci_high) << "]"
              << (report.flat ? " (flat likelihood)" : "") << "\n";
  }
  save_manifest(estimate_manifest(curve_only ? "curve" : "estimate", a, inputs),
                a.out + ".manifest.json");
}

struct NormalizeArgs {
  std::string matrix;
  std::string inputs;
  std::string out = "normalize";
  std::string norm = "exact";
  std::uint64_t draws = 10000;
  std::uint64_t seed = 0;
  int workers = 0;
};

void run_normalize(const NormalizeArgs& a) {
  const TransmissionMatrix u = load_matrix_with_diagnostic(a.matrix);
  const std::vector<int> inputs = parse_mode_list(a.inputs);
  const NormMethod method = parse_norm_method(a.norm);
  const NormalizationPoly norm = method == NormMethod::kExact
                                     ? normalization_exact(u, inputs, a.workers)
                                     : normalization_mc(u, inputs, a.draws, a.seed, a.workers);
  json j;
  j["method"] = norm.method == NormMethod::kExact ? "exact" : "monte-carlo";
  j["draws"] = norm.draws;
  j["coeffs"] = norm.coeffs;
  j["coeff_stderr"] = norm.coeff_stderr;
  j["collision_fraction_at_1"] = 1.0 - norm.value_at(1.0);
  j["unitarity_deviation"] = unitarity_deviation(u);
  write_file(a.out + ".json", j.dump(2) + "\n");

  RunManifest manifest;
  manifest.command = "normalize";
  manifest.version = kVersion;
  manifest.parameters["--matrix"] = a.matrix;
  manifest.parameters["--inputs"] = join_ints(inputs);
  manifest.parameters["--norm"] = a.norm;
  manifest.parameters["--draws"] = std::to_string(a.draws);
  manifest.parameters["--seed"] = std::to_string(a.seed);
  manifest.parameters["--workers"] = std::to_string(a.workers);
  manifest.parameters["--out"] = a.out;
  add_input_digest(manifest, a.matrix);
  save_manifest(manifest, a.out + ".manifest.json");
}

struct SimulateArgs {
  std::string matrix;
  std::string inputs;
  std::string out = "samples.txt";
  std::string sampler = "auto";
  double x = 1.0;
  double dark = 0.0;
  double multi = 0.0;
  double msigma = 0.0;
  std::uint64_t count = 10000;
  std::uint64_t seed = 0;
  std::uint64_t burn_in = 100;
  std::uint64_t thinning = 10;
};

void run_simulate(const SimulateArgs& a) {
  const TransmissionMatrix u = load_matrix_with_diagnostic(a.matrix);
  const std::vector<int> inputs = parse_mode_list(a.inputs);
  const bool has_noise = a.dark > 0.0 || a.multi > 0.0 || a.msigma > 0.0;
  std::string sampler = a.sampler;
  if (sampler == "auto") sampler = has_noise ? "noisy" : "exact";

  SampleSet samples;
  if (sampler == "exact") {
    if (has_noise) {
      throw ConfigError("--sampler exact cannot apply dark, multi, or msigma noise; use "
                        "--sampler noisy");
    }
    samples = exact_sampler(u, inputs, a.x, a.count, a.seed);
  } else if (sampler == "mcmc") {
    if (has_noise) {
      throw ConfigError("--sampler mcmc cannot apply dark, multi, or msigma noise; use "
                        "--sampler noisy");
    }
    samples = mcmc_sampler(u, inputs, a.x, a.count, a.seed, a.burn_in, a.thinning);
  } else if (sampler == "noisy") {
    NoiseConfig cfg;
    cfg.x_true = a.x;
    cfg.dark_count_prob = a.dark;
    cfg.multiphoton_prob = a.multi;
    cfg.matrix_noise_sigma = a.msigma;
    cfg.seed = a.seed;
    samples = generate_noisy_samples(u, inputs, cfg, a.count);
  } else {
    throw ConfigError("--sampler must be auto, exact, mcmc, or noisy, got '" + a.sampler + "'");
  }
  save_samples(samples, a.out);

  RunManifest manifest;
  manifest.command = "simulate";
  manifest.version = kVersion;
  manifest.parameters["--matrix"] = a.matrix;
  manifest.parameters["--inputs"] = join_ints(inputs);
  manifest.parameters["--sampler"] = sampler;
  manifest.parameters["--x"] = format_double(a.x);
  manifest.parameters["--dark"] = format_double(a.dark);
  manifest.parameters["--multi"] = format_double(a.multi);
  manifest.parameters["--msigma"] = format_double(a.msigma);
  manifest.parameters["--count"] = std::to_string(a.count);
  manifest.parameters["--seed"] = std::to_string(a.seed);
  manifest.parameters["--burn-in"] = std::to_string(a.burn_in);
  manifest.parameters["--thinning"] = std::to_string(a.thinning);
  manifest.parameters["--out"] = a.out;
  add_input_digest(manifest, a.matrix);
  save_manifest(manifest, a.out + ".manifest.json");
}

struct BudgetArgs {
  std::string matrix;
  std::string inputs;
  std::string reference;
  std::string ladder = "hom,mis,multi,dark";
  std::string out = "budget";
  std::string norm = "exact";
  double x = 1.0;
  double dark = 0.0;
  double multi = 0.0;
  double msigma = 0.0;
  std::uint64_t count = 10000;
  std::uint64_t draws = 10000;
  std::uint64_t seed = 0;
  double threshold = 0.05;
  int workers = 0;
};

std::vector<BudgetRung> parse_ladder(const std::string& text) {
  std::vector<BudgetRung> rungs;
  std::vector<Imperfection> active;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    Imperfection imp;
    bool add = true;
    if (token == "hom") {
      add = false;
    } else if (token == "mis") {
      imp = Imperfection::kMatrixNoise;
    } else if (token == "multi") {
      imp = Imperfection::kMultiphoton;
    } else if (token == "dark") {
      imp = Imperfection::kDarkCounts;
    } else {
      throw ConfigError("--ladder token '" + token + "' is not one of hom, mis, multi, dark");
    }
    if (add) {
      if (std::find(active.begin(), active.end(), imp) != active.end()) {
        throw ConfigError("--ladder repeats token '" + token + "'");
      }
      active.push_back(imp);
    }
    rungs.push_back(BudgetRung{token, active});
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  if (rungs.empty()) throw ConfigError("--ladder must not be empty");
  return rungs;
}

void run_budget(const BudgetArgs& a) {
  const TransmissionMatrix u = load_matrix_with_diagnostic(a.matrix);
  const std::vector<int> inputs = parse_mode_list(a.inputs);
  const std::vector<BudgetRung> ladder = parse_ladder(a.ladder);

  SampleSet reference;
  const bool has_reference = !a.reference.empty();
  if (has_reference) reference = load_samples(a.reference, static_cast<int>(u.rows()));

  NoiseConfig strengths;
  strengths.x_true = a.x;
  strengths.dark_count_prob = a.dark;
  strengths.multiphoton_prob = a.multi;
  strengths.matrix_noise_sigma = a.msigma;
  strengths.seed = a.seed;

  MleOptions opts;
  opts.rel_lik_threshold = a.threshold;
  opts.norm_method = parse_norm_method(a.norm);
  opts.mc_draws = a.draws;
  opts.seed = a.seed;
  opts.workers = a.workers;

  const std::vector<BudgetRow> rows =
      error_budget(u, inputs, strengths, ladder, a.count, has_reference ? &reference : nullptr,
                   opts);

  std::string csv = "label,x_hat,ci_low,ci_high,rel_log10_likelihood\n";
  json jrows = json::array();
  for (const BudgetRow& row : rows) {
    csv += row.label + ',' + format_double(row.x_hat) + ',' + format_double(row.ci_low) + ',' +
           format_double(row.ci_high) + ',';
    if (row.rel_log10_likelihood) csv += format_double(*row.rel_log10_likelihood);
    csv += '\n';
    json jr;
    jr["label"] = row.label;
    jr["x_hat"] = row.x_hat;
    jr["ci_low"] = row.ci_low;
    jr["ci_high"] = row.ci_high;
    if (row.rel_log10_likelihood) {
      jr["rel_log10_likelihood"] = *row.rel_log10_likelihood;
    } else {
      jr["rel_log10_likelihood"] = nullptr;
    }
    jrows.push_back(std::move(jr));
  }
  write_file(a.out + ".csv", csv);
  write_file(a.out + ".json", jrows.dump(2) + "\n");

  RunManifest manifest;
  manifest.command = "budget";
  manifest.version = kVersion;
  manifest.parameters["--matrix"] = a.matrix;
  manifest.parameters["--inputs"] = join_ints(inputs);
  manifest.parameters["--ladder"] = a.ladder;
  manifest.parameters["--x"] = format_double(a.x);
  manifest.parameters["--dark"] = format_double(a.dark);
  manifest.parameters["--multi"] = format_double(a.multi);
  manifest.parameters["--msigma"] = format_double(a.msigma);
  manifest.parameters["--count"] = std::to_string(a.count);
  manifest.parameters["--norm"] = a.norm;
  manifest.parameters["--draws"] = std::to_string(a.draws);
  manifest.parameters["--threshold"] = format_double(a.threshold);
  manifest.parameters["--seed"] = std::to_string(a.seed);
  manifest.parameters["--workers"] = std::to_string(a.workers);
  manifest.parameters["--out"] = a.out;
  if (has_reference) manifest.parameters["--reference"] = a.reference;
  add_input_digest(manifest, a.matrix);
  if (has_reference) add_input_digest(manifest, a.reference);
  save_manifest(manifest, a.out + ".manifest.json");
}

struct MonitorArgs {
  std::string samples;
  std::string matrix;
  std::string inputs;
  std::string out;
  std::string norm = "exact";
  std::uint64_t window = 10000;
  std::uint64_t step = 1;
  double threshold = 0.05;
  double grid_step = 1e-3;
  std::uint64_t draws = 10000;
  std::uint64_t seed = 0;
  int workers = 0;
};

void run_monitor(const MonitorArgs& a) {
  const TransmissionMatrix u = load_matrix_with_diagnostic(a.matrix);
  const std::vector<int> inputs = parse_mode_list(a.inputs);
  MonitorOptions opts;
  opts.window = a.window;
  opts.step = a.step;
  opts.rel_lik_threshold = a.threshold;
  opts.grid_step = a.grid_step;
  opts.norm_method = parse_norm_method(a.norm);
  opts.mc_draws = a.draws;
  opts.seed = a.seed;
  opts.workers = a.workers;

  std::string records;
  const bool to_stdout = a.out.empty();
  auto emit = [&](const MonitorPoint& point) {
    const std::string record = monitor_record(point);
    if (to_stdout) {
      std::cout << record << "\n" << std::flush;
    } else {
      records += record;
      records += '\n';
    }
  };

  if (a.samples == "-") {
    StreamMonitor monitor(u, inputs, opts);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(std::cin, line)) {
      ++line_number;
      if (line.empty() || line == "\r") continue;
      if (auto point =
              monitor.push(parse_sample_line(line, static_cast<int>(u.rows()), line_number))) {
        emit(*point);
      }
    }
    if (monitor.samples_seen() < opts.window) {
      throw SizeError("stream ended after " + std::to_string(monitor.samples_seen()) +
                      " samples, shorter than one window of " + std::to_string(opts.window));
    }
  } else {
    const SampleSet stream = load_samples(a.samples, static_cast<int>(u.rows()));
    for (const MonitorPoint& point : rolling_estimates(stream, u, inputs, opts)) emit(point);
  }

  if (!to_stdout) {
    write_file(a.out + ".jsonl", records);
    RunManifest manifest;
    manifest.command = "monitor";
    manifest.version = kVersion;
    manifest.parameters["--samples"] = a.samples;
    manifest.parameters["--matrix"] = a.matrix;
    manifest.parameters["--inputs"] = join_ints(inputs);
    manifest.parameters["--window"] = std::to_string(a.window);
    manifest.parameters["--step"] = std::to_string(a.step);
    manifest.parameters["--threshold"] = format_double(a.threshold);
    manifest.parameters["--grid-step"] = format_double(a.grid_step);
    manifest.parameters["--norm"] = a.norm;
    manifest.parameters["--draws"] = std::to_string(a.draws);
    manifest.parameters["--seed"] = std::to_string(a.seed);
    manifest.parameters["--workers"] = std::to_string(a.workers);
    manifest.parameters["--out"] = a.out;
    add_input_digest(manifest, a.matrix);
    if (a.samples != "-") add_input_digest(manifest, a.samples);
    save_manifest(manifest, a.out + ".manifest.json");
  }
}

struct AccuracyArgs {
  std::string matrix;
  std::string inputs;
  std::string n_list = "3,4";
  std::string out = "accuracy";
  double x = 1.0;
  std::uint64_t samples_per_n = 10000;
  std::uint64_t seed = 0;
  double threshold = 0.05;
  int workers = 0;
};

void run_accuracy(const AccuracyArgs& a) {
  const TransmissionMatrix u = load_matrix_with_diagnostic(a.matrix);
  const std::vector<int> inputs = parse_mode_list(a.inputs);
  const std::vector<int> n_list = parse_int_list(a.n_list, "--n-list");
  MleOptions opts;
  opts.rel_lik_threshold = a.threshold;
  opts.workers = a.workers;
  const std::vector<AccuracyRow> rows =
      accuracy_benchmark(n_list, u, inputs, a.samples_per_n, a.x, a.seed, opts);

  std::string csv = "n,x_hat,ci_low,ci_high,ci_width\n";
  for (const AccuracyRow& row : rows) {
    csv += std::to_string(row.n) + ',' + format_double(row.x_hat) + ',' +
           format_double(row.ci_low) + ',' + format_double(row.ci_high) + ',' +
           format_double(row.ci_width) + '\n';
  }
  write_file(a.out + ".csv", csv);

  RunManifest manifest;
  manifest.command = "accuracy";
  manifest.version = kVersion;
  manifest.parameters["--matrix"] = a.matrix;
  manifest.parameters["--inputs"] = join_ints(inputs);
  manifest.parameters["--n-list"] = a.n_list;
  manifest.parameters["--x"] = format_double(a.x);
  manifest.parameters["--samples-per-n"] = std::to_string(a.samples_per_n);
  manifest.parameters["--threshold"] = format_double(a.threshold);
  manifest.parameters["--seed"] = std::to_string(a.seed);
  manifest.parameters["--workers"] = std::to_string(a.workers);
  manifest.parameters["--out"] = a.out;
  add_input_digest(manifest, a.matrix);
  save_manifest(manifest, a.out + ".manifest.json");
}

void emit_error_record(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"boson sampler indistinguishability benchmarking", "bosonbench"};
  app.require_subcommand(1);

  EstimateArgs est;
  est.out = "estimate";
  CLI::App* cmd_estimate =
      app.add_subcommand("estimate", "estimate x from samples and a transmission matrix");
  add_estimate_options(cmd_estimate, est);
  cmd_estimate->callback([&est] { run_estimate(est, false); });

  EstimateArgs crv;
  crv.out = "curve";
  CLI::App* cmd_curve = app.add_subcommand("curve", "write the log-likelihood curve only");
  add_estimate_options(cmd_curve, crv);
  cmd_curve->callback([&crv] { run_estimate(crv, true); });

  NormalizeArgs nrm;
  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "collision-free normalization polynomial N(x)");
  cmd_normalize->add_option("--matrix", nrm.matrix, "transmission matrix JSON file")->required();
  cmd_normalize->add_option("--inputs", nrm.inputs, "comma-separated occupied input modes")
      ->required();
  cmd_normalize->add_option("--norm", nrm.norm, "method: exact or mc");
  cmd_normalize->add_option("--draws", nrm.draws, "Monte Carlo draws");
  cmd_normalize->add_option("--seed", nrm.seed, "RNG seed");
  cmd_normalize->add_option("--workers", nrm.workers, "worker threads (0 = all cores)");
  cmd_normalize->add_option("--out", nrm.out, "output path prefix");
  cmd_normalize->callback([&nrm] { run_normalize(nrm); });

  SimulateArgs sim;
  CLI::App* cmd_simulate = app.add_subcommand("simulate", "generate synthetic sample streams");
  cmd_simulate->add_option("--matrix", sim.matrix, "transmission matrix JSON file")->required();
  cmd_simulate->add_option("--inputs", sim.inputs, "comma-separated occupied input modes")
      ->required();
  cmd_simulate->add_option("--x", sim.x, "pairwise indistinguishability of the source");
  cmd_simulate->add_option("--dark", sim.dark, "dark count probability per event");
  cmd_simulate->add_option("--multi", sim.multi, "double emission probability per mode");
  cmd_simulate->add_option("--msigma", sim.msigma, "relative matrix perturbation sigma");
  cmd_simulate->add_option("--count", sim.count, "number of samples");
  cmd_simulate->add_option("--seed", sim.seed, "RNG seed");
  cmd_simulate->add_option("--sampler", sim.sampler, "auto, exact, mcmc, or noisy");
  cmd_simulate->add_option("--burn-in", sim.burn_in, "MCMC burn-in steps");
  cmd_simulate->add_option("--thinning", sim.thinning, "MCMC thinning stride");
  cmd_simulate->add_option("--out", sim.out, "output sample file");
  cmd_simulate->callback([&sim] { run_simulate(sim); });

  BudgetArgs bud;
  CLI::App* cmd_budget =
      app.add_subcommand("budget", "cumulative error budget across imperfections");
  cmd_budget->add_option("--matrix", bud.matrix, "transmission matrix JSON file")->required();
  cmd_budget->add_option("--inputs", bud.inputs, "comma-separated occupied input modes")
      ->required();
  cmd_budget->add_option("--ladder", bud.ladder, "cumulative rungs from hom, mis, multi, dark");
  cmd_budget->add_option("--x", bud.x, "source indistinguishability");
  cmd_budget->add_option("--dark", bud.dark, "dark count probability per event");
  cmd_budget->add_option("--multi", bud.multi, "double emission probability per mode");
  cmd_budget->add_option("--msigma", bud.msigma, "relative matrix perturbation sigma");
  cmd_budget->add_option("--count", bud.count, "samples per rung");
  cmd_budget->add_option("--reference", bud.reference, "reference sample file for likelihoods");
  cmd_budget->add_option("--norm", bud.norm, "normalization method: exact or mc");
  cmd_budget->add_option("--draws", bud.draws, "Monte Carlo normalization draws");
  cmd_budget->add_option("--threshold", bud.threshold, "relative likelihood CI threshold");
  cmd_budget->add_option("--seed", bud.seed, "RNG seed");
  cmd_budget->add_option("--workers", bud.workers, "worker threads (0 = all cores)");
  cmd_budget->add_option("--out", bud.out, "output path prefix");
  cmd_budget->callback([&bud] { run_budget(bud); });

  MonitorArgs mon;
  CLI::App* cmd_monitor =
      app.add_subcommand("monitor", "rolling-window estimates over a sample stream");
  cmd_monitor->add_option("--samples", mon.samples, "sample file, or - for stdin")->required();
  cmd_monitor->add_option("--matrix", mon.matrix, "transmission matrix JSON file")->required();
  cmd_monitor->add_option("--inputs", mon.inputs, "comma-separated occupied input modes")
      ->required();
  cmd_monitor->add_option("--window", mon.window, "window length in samples");
  cmd_monitor->add_option("--step", mon.step, "stride between window starts");
  cmd_monitor->add_option("--threshold", mon.threshold, "relative likelihood CI threshold");
  cmd_monitor->add_option("--grid-step", mon.grid_step, "likelihood grid step");
  cmd_monitor->add_option("--norm", mon.norm, "normalization method: exact or mc");
  cmd_monitor->add_option("--draws", mon.draws, "Monte Carlo normalization draws");
  cmd_monitor->add_option("--seed", mon.seed, "RNG seed");
  cmd_monitor->add_option("--workers", mon.workers, "worker threads (0 = all cores)");
  cmd_monitor->add_option("--out", mon.out, "output path prefix (default: stream to stdout)");
  cmd_monitor->callback([&mon] { run_monitor(mon); });

  AccuracyArgs acc;
  CLI::App* cmd_accuracy =
      app.add_subcommand("accuracy", "CI width versus photon number at fixed sample count");
  cmd_accuracy->add_option("--matrix", acc.matrix, "transmission matrix JSON file")->required();
  cmd_accuracy->add_option("--inputs", acc.inputs, "input modes; the first n are used per n")
      ->required();
  cmd_accuracy->add_option("--n-list", acc.n_list, "comma-separated photon counts");
  cmd_accuracy->add_option("--x", acc.x, "true indistinguishability for simulation");
  cmd_accuracy->add_option("--samples-per-n", acc.samples_per_n, "samples per photon count");
  cmd_accuracy->add_option("--threshold", acc.threshold, "relative likelihood CI threshold");
  cmd_accuracy->add_option("--seed", acc.seed, "RNG seed");
  cmd_accuracy->add_option("--workers", acc.workers, "worker threads (0 = all cores)");
  cmd_accuracy->add_option("--out", acc.out, "output path prefix");
  cmd_accuracy->callback([&acc] { run_accuracy(acc); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error_record("usage", e.what());
    return 2;
  } catch (const ConfigError& e) {
    emit_error_record("config", e.what());
    return 2;
  } catch (const ParseError& e) {
    emit_error_record("parse", e.what());
    return 1;
  } catch (const IoError& e) {
    emit_error_record("io", e.what());
    return 1;
  } catch (const Error& e) {
    emit_error_record("error", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error_record("internal", e.what());
    return 1;
  }
  return 0;
}

}  // namespace bb
