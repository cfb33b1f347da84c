// qlms-sparse: run a QLMS / ZA-QLMS sparse identification scenario and write
// the averaged learning curves as CSV.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zaqlms/config.hpp"
#include "zaqlms/csv.hpp"
#include "zaqlms/errors.hpp"
#include "zaqlms/experiment.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfigError = 2,
  kDiverged = 3,
  kIoError = 4,
  kInternal = 5,
};

void print_summary(const zaqlms::ScenarioConfig& config,
                   const std::vector<zaqlms::LearningCurve>& curves) {
  std::printf("runs=%zu iterations=%zu L=%zu mu=%g rho=%g snr_db=%g seed=%llu\n", config.num_runs,
              config.num_iterations, config.length, config.mu, config.rho, config.snr_db,
              static_cast<unsigned long long>(config.master_seed));
  for (const auto& curve : curves) {
    const auto s = zaqlms::summarize(curve);
    std::printf("%-8s steady_state_db=%.3f converged_at=", std::string(zaqlms::label(s.algorithm)).c_str(),
                s.steady_state_db);
    if (s.convergence_iteration) {
      std::printf("%zu", *s.convergence_iteration);
    } else {
      std::printf("never");
    }
    std::printf(" (threshold %.3f dB)\n", s.threshold_db);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion LMS / zero-attracting QLMS sparse system identification"};
  app.name("qlms-sparse");

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  unsigned threads = 0;
  bool quiet = false;

  app.add_option("--config", config_path, "Scenario file (key = value lines)")->required();
  app.add_option("--out", out_path, "Destination CSV for the learning curves")->required();
  app.add_option("--seed", seed, "Override master_seed");
  app.add_option("--runs", runs, "Override num_runs");
  app.add_option("--threads", threads, "Worker threads (0 = all cores, 1 = serial)");
  app.add_flag("--quiet", quiet, "Suppress the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  zaqlms::ScenarioConfig config;
  try {
    config = zaqlms::load_config(config_path);
    if (seed) config.master_seed = *seed;
    if (runs) config.num_runs = *runs;
    zaqlms::validate(config);
  } catch (const zaqlms::ConfigError& e) {
    std::cerr << "qlms-sparse: config error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    const auto curves = zaqlms::run_scenario(config, {threads});
    zaqlms::emit_csv(curves, out_path);
    if (!quiet) {
      print_summary(config, curves);
    }
  } catch (const zaqlms::DivergenceError& e) {
    std::cerr << "qlms-sparse: diverged: " << e.what() << '\n';
    return kDiverged;
  } catch (const zaqlms::IoError& e) {
    std::cerr << "qlms-sparse: i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "qlms-sparse: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
