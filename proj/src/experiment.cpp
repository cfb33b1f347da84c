#include "zaqlms/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "zaqlms/adaptive.hpp"
#include "zaqlms/errors.hpp"

namespace zaqlms {

std::string_view label(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Qlms: return "qlms";
    case Algorithm::ZaQlms: return "za_qlms";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "qlms") return Algorithm::Qlms;
  if (text == "za_qlms") return Algorithm::ZaQlms;
  return std::nullopt;
}

std::string_view label(ColoringKind kind) {
  return kind == ColoringKind::Real ? "real" : "quaternion";
}

std::optional<ColoringKind> parse_coloring(std::string_view text) {
  if (text == "quaternion") return ColoringKind::Quaternion;
  if (text == "real") return ColoringKind::Real;
  return std::nullopt;
}

void validate(const ScenarioConfig& config) {
  if (!(std::isfinite(config.mu) && config.mu > 0.0)) {
    throw ConfigError("mu: must be a finite number > 0");
  }
  if (!(std::isfinite(config.rho) && config.rho >= 0.0)) {
    throw ConfigError("rho: must be a finite number >= 0");
  }
  if (std::isnan(config.snr_db) || config.snr_db == -std::numeric_limits<double>::infinity()) {
    throw ConfigError("snr_db: must be finite or +inf (noiseless)");
  }
  if (config.num_iterations < 1) {
    throw ConfigError("num_iterations: must be >= 1");
  }
  if (config.num_runs < 1) {
    throw ConfigError("num_runs: must be >= 1");
  }
  if (config.coloring_len < 1) {
    throw ConfigError("coloring_len: must be >= 1");
  }
  if (!(std::isfinite(config.input_power) && config.input_power > 0.0)) {
    throw ConfigError("input_power: must be a finite number > 0");
  }
  if (config.algorithms.empty()) {
    throw ConfigError("algorithms: at least one algorithm is required");
  }
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (config.algorithms[a] == config.algorithms[b]) {
        throw ConfigError("algorithms: duplicate entry '" + std::string(label(config.algorithms[a])) +
                          "'");
      }
    }
  }
  if (!config.tap_values.empty() && config.tap_values.size() != config.active_taps.size()) {
    throw ConfigError("tap_values: expected " + std::to_string(config.active_taps.size()) +
                      " values to match active_taps");
  }
  SparseSystemSpec probe{config.length, config.active_taps,
                         std::vector<Quaternion>(config.active_taps.size(), Quaternion(1.0))};
  if (!config.tap_values.empty()) {
    probe.tap_values = config.tap_values;
  }
  try {
    validate(probe);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("system: ") + e.what());
  }
}

SparseSystemSpec resolve_system(const ScenarioConfig& config) {
  SparseSystemSpec spec{config.length, config.active_taps, config.tap_values};
  if (spec.tap_values.empty()) {
    RngStream rng(config.master_seed, StreamId::System);
    for (std::size_t t = 0; t < spec.active_taps.size(); ++t) {
      spec.tap_values.push_back(random_unit_quaternion(rng));
    }
  }
  validate(spec);
  return spec;
}

QVector coloring_filter(const ScenarioConfig& config) {
  RngStream rng(config.master_seed, StreamId::Coloring);
  return config.coloring == ColoringKind::Real ? gen_real_coloring_filter(rng, config.coloring_len)
                                                : gen_coloring_filter(rng, config.coloring_len);
}

namespace {

Realization realize(const ScenarioConfig& config, const QVector& system, const QVector& coloring,
                    std::size_t run_index) {
  const std::size_t n_iter = config.num_iterations;
  RngStream input_rng(config.master_seed, StreamId::Input, run_index);
  Realization out;
  out.input = fir_filter(coloring, white_qgauss(input_rng, n_iter, config.input_power));

  // Unknown-system output on the same delayed regressor the filter sees.
  Sequence clean(n_iter);
  QVector regressor(system.size());
  for (std::size_t n = 0; n < n_iter; ++n) {
    clean[n] = dot_t(system, regressor);
    std::shift_right(regressor.elems().begin(), regressor.elems().end(), 1);
    regressor[0] = out.input[n];
  }

  if (std::isinf(config.snr_db)) {
    out.desired = std::move(clean);
    return out;
  }
  RngStream noise_rng(config.master_seed, StreamId::Noise, run_index);
  const Sequence noise =
      scale_noise_to_snr(clean, white_qgauss(noise_rng, n_iter, 1.0), config.snr_db);
  out.desired.resize(n_iter);
  for (std::size_t n = 0; n < n_iter; ++n) {
    out.desired[n] = clean[n] + noise[n];
  }
  return out;
}

double rho_for(const ScenarioConfig& config, Algorithm algorithm) {
  return algorithm == Algorithm::ZaQlms ? config.rho : 0.0;
}

std::vector<std::vector<double>> paired(const ScenarioConfig& config, const QVector& system,
                                        const QVector& coloring, std::size_t run_index) {
  const Realization r = realize(config, system, coloring, run_index);
  std::vector<std::vector<double>> out;
  out.reserve(config.algorithms.size());
  for (Algorithm algorithm : config.algorithms) {
    try {
      out.push_back(filter_realization(r, config.length, config.mu, rho_for(config, algorithm)));
    } catch (const DivergenceError& e) {
      throw DivergenceError(std::string(label(algorithm)) + " diverged in run " +
                                std::to_string(run_index) + ": " + e.what(),
                            e.iteration(), run_index);
    }
  }
  return out;
}

}  // namespace

Realization make_realization(const ScenarioConfig& config, std::size_t run_index) {
  validate(config);
  return realize(config, build_system(resolve_system(config)), coloring_filter(config), run_index);
}

std::vector<double> filter_realization(const Realization& realization, std::size_t length,
                                       double mu, double rho) {
  const std::size_t n_iter = realization.desired.size();
  const double limit = kDivergenceRatio * mean_power(realization.desired);

  FilterState state(length, mu, rho);
  QVector regressor(length);
  std::vector<double> squared_error(n_iter);
  for (std::size_t n = 0; n < n_iter; ++n) {
    const StepRecord rec = state.advance(regressor, realization.desired[n]);
    squared_error[n] = norm_sq(rec.e);
    if (limit > 0.0 && !(squared_error[n] <= limit)) {
      throw DivergenceError("squared error exceeded " + std::to_string(kDivergenceRatio) +
                                "x the reference power at iteration " + std::to_string(n),
                            n);
    }
    std::shift_right(regressor.elems().begin(), regressor.elems().end(), 1);
    regressor[0] = realization.input[n];
  }
  return squared_error;
}

std::vector<std::vector<double>> run_paired(const ScenarioConfig& config, std::size_t run_index) {
  validate(config);
  return paired(config, build_system(resolve_system(config)), coloring_filter(config), run_index);
}

std::vector<double> run_single(const ScenarioConfig& config, std::size_t run_index,
                               Algorithm algorithm) {
  ScenarioConfig single = config;
  single.algorithms = {algorithm};
  return run_paired(single, run_index).front();
}

std::vector<LearningCurve> run_scenario(const ScenarioConfig& config, RunOptions options) {
  validate(config);
  const QVector system = build_system(resolve_system(config));
  const QVector coloring = coloring_filter(config);

  const std::size_t runs = config.num_runs;
  std::vector<std::vector<std::vector<double>>> per_run(runs);
  std::vector<std::exception_ptr> failures(runs);

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, runs));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < runs; r = next++) {
      try {
        per_run[r] = paired(config, system, coloring, r);
      } catch (...) {
        failures[r] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }

  for (const auto& failure : failures) {
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  std::vector<LearningCurve> curves;
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    LearningCurve curve;
    curve.algorithm = config.algorithms[a];
    curve.mse_linear.assign(config.num_iterations, 0.0);
    for (std::size_t r = 0; r < runs; ++r) {
      const auto& sq = per_run[r][a];
      for (std::size_t n = 0; n < sq.size(); ++n) {
        curve.mse_linear[n] += sq[n];
      }
    }
    curve.mse_db.resize(config.num_iterations);
    for (std::size_t n = 0; n < config.num_iterations; ++n) {
      curve.mse_linear[n] /= static_cast<double>(runs);
      curve.mse_db[n] = 10.0 * std::log10(curve.mse_linear[n]);
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

double steady_state_mse(const LearningCurve& curve, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw std::invalid_argument("tail_fraction must lie in (0, 1]");
  }
  const std::size_t n = curve.mse_db.size();
  const auto tail = static_cast<std::size_t>(tail_fraction * static_cast<double>(n));
  if (tail == 0) {
    throw std::invalid_argument("steady-state tail is empty");
  }
  const double sum = std::accumulate(curve.mse_db.end() - static_cast<std::ptrdiff_t>(tail),
                                     curve.mse_db.end(), 0.0);
  return sum / static_cast<double>(tail);
}

std::optional<std::size_t> convergence_iteration(const LearningCurve& curve, double threshold_db,
                                                 std::size_t hold) {
  const auto& db = curve.mse_db;
  const double ceiling = threshold_db + kConvergenceMarginDb;
  for (std::size_t n = 0; n < db.size(); ++n) {
    if (!(db[n] <= threshold_db)) {
      continue;
    }
    const std::size_t stop = std::min(db.size(), n + 1 + hold);
    const bool settled =
        std::all_of(db.begin() + static_cast<std::ptrdiff_t>(n + 1),
                    db.begin() + static_cast<std::ptrdiff_t>(stop), [&](double v) { return v <= ceiling; });
    if (settled) {
      return n;
    }
  }
  return std::nullopt;
}

CurveSummary summarize(const LearningCurve& curve, double tail_fraction) {
  CurveSummary s;
  s.algorithm = curve.algorithm;
  s.steady_state_db = steady_state_mse(curve, tail_fraction);
  s.threshold_db = s.steady_state_db + kConvergenceMarginDb;
  s.convergence_iteration = convergence_iteration(curve, s.threshold_db);
  return s;
}

}  // namespace zaqlms
