#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zaqlms/signal.hpp"

namespace zaqlms {

enum class Algorithm { Qlms, ZaQlms };

/// "qlms" or "za_qlms"; used in CSV headers and config files.
std::string_view label(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view text);

enum class ColoringKind { Quaternion, Real };

std::string_view label(ColoringKind kind);
std::optional<ColoringKind> parse_coloring(std::string_view text);

/// Full description of one Monte-Carlo experiment.
///
/// active_taps are 0-based. When tap_values is empty the active taps are
/// drawn once per experiment as unit-modulus quaternions from the System
/// stream of master_seed. snr_db = +inf means noiseless observations.
struct ScenarioConfig {
  std::size_t length = 32;
  std::vector<std::size_t> active_taps;
  std::vector<Quaternion> tap_values;
  double mu = 0.0;
  double rho = 0.0;
  double snr_db = 30.0;
  std::size_t num_iterations = 1;
  std::size_t num_runs = 1;
  std::size_t coloring_len = 5;
  ColoringKind coloring = ColoringKind::Quaternion;
  double input_power = 1.0;
  std::uint64_t master_seed = 0;
  std::vector<Algorithm> algorithms{Algorithm::Qlms, Algorithm::ZaQlms};

  bool operator==(const ScenarioConfig&) const = default;
};

/// Throws ConfigError naming the first violated field invariant.
void validate(const ScenarioConfig& config);

/// The unknown system, with tap values resolved (drawn if not given).
SparseSystemSpec resolve_system(const ScenarioConfig& config);

/// The coloring filter shared by every run of the experiment.
QVector coloring_filter(const ScenarioConfig& config);

/// One run's observations: colored input x and reference d = w_opt^T x[n] + v[n],
/// where the regressor is x[n] = [x[n-1], ..., x[n-L]] (zero before the start).
struct Realization {
  Sequence input;
  Sequence desired;
};

Realization make_realization(const ScenarioConfig& config, std::size_t run_index);

/// Per-iteration |e[n]|^2 for one algorithm on the given run. Both algorithms
/// see the same realization for a given run_index. Throws DivergenceError if
/// a weight turns non-finite or |e[n]|^2 exceeds kDivergenceRatio times the
/// reference power mean|d|^2.
std::vector<double> run_single(const ScenarioConfig& config, std::size_t run_index,
                               Algorithm algorithm);

/// Runs every algorithm of the config on one realization. Entries follow
/// config.algorithms.
std::vector<std::vector<double>> run_paired(const ScenarioConfig& config, std::size_t run_index);

/// Runs one filter over a realization, returning |e[n]|^2 per iteration.
std::vector<double> filter_realization(const Realization& realization, std::size_t length,
                                       double mu, double rho);

inline constexpr double kDivergenceRatio = 1e6;

struct LearningCurve {
  Algorithm algorithm = Algorithm::Qlms;
  std::vector<double> mse_linear;
  std::vector<double> mse_db;
};

struct RunOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency(), 1 is serial.
  unsigned threads = 0;
};

/// Averages |e[n]|^2 over config.num_runs paired runs for each algorithm.
/// Output is independent of the thread count: per-run results are reduced in
/// run-index order. On divergence, rethrows the error of the lowest failing
/// run index.
std::vector<LearningCurve> run_scenario(const ScenarioConfig& config, RunOptions options = {});

/// Mean of mse_db over the last floor(tail_fraction * N) iterations.
double steady_state_mse(const LearningCurve& curve, double tail_fraction);

/// First iteration n with mse_db[n] <= threshold_db whose following `hold`
/// iterations (fewer near the end of the curve) all stay within threshold_db + 3.
std::optional<std::size_t> convergence_iteration(const LearningCurve& curve, double threshold_db,
                                                 std::size_t hold = 100);

struct CurveSummary {
  Algorithm algorithm = Algorithm::Qlms;
  double steady_state_db = 0.0;
  double threshold_db = 0.0;
  std::optional<std::size_t> convergence_iteration;
};

inline constexpr double kDefaultTailFraction = 0.2;
inline constexpr double kConvergenceMarginDb = 3.0;

/// Steady state over the default tail and convergence at steady state + 3 dB.
CurveSummary summarize(const LearningCurve& curve, double tail_fraction = kDefaultTailFraction);

}  // namespace zaqlms
