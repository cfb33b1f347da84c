#include <cmath>
#include <limits>
#include <numeric>

#include "doctest.h"
#include "zaqlms/errors.hpp"
#include "zaqlms/experiment.hpp"

using zaqlms::Algorithm;
using zaqlms::LearningCurve;
using zaqlms::ScenarioConfig;

namespace {

ScenarioConfig small_config() {
  ScenarioConfig c;
  c.length = 4;
  c.active_taps = {0, 2};
  c.mu = 0.02;
  c.rho = 1e-4;
  c.snr_db = 30.0;
  c.num_iterations = 300;
  c.num_runs = 4;
  c.master_seed = 11;
  return c;
}

LearningCurve curve_from_db(std::vector<double> db) {
  LearningCurve c;
  c.mse_db = db;
  for (double v : db) c.mse_linear.push_back(std::pow(10.0, v / 10.0));
  return c;
}

double stddev(const std::vector<double>& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / (v.size() - 1));
}

}  // namespace

TEST_CASE("config validation names the field") {
  ScenarioConfig c = small_config();
  CHECK_NOTHROW(zaqlms::validate(c));
  c.mu = -1;
  CHECK_THROWS_WITH_AS(zaqlms::validate(c), doctest::Contains("mu"), zaqlms::ConfigError);
  c = small_config();
  c.rho = -1;
  CHECK_THROWS_WITH_AS(zaqlms::validate(c), doctest::Contains("rho"), zaqlms::ConfigError);
  c = small_config();
  c.num_runs = 0;
  CHECK_THROWS_WITH_AS(zaqlms::validate(c), doctest::Contains("num_runs"), zaqlms::ConfigError);
  c = small_config();
  c.snr_db = std::nan("");
  CHECK_THROWS_AS(zaqlms::validate(c), zaqlms::ConfigError);
  c.snr_db = std::numeric_limits<double>::infinity();
  CHECK_NOTHROW(zaqlms::validate(c));
  c = small_config();
  c.active_taps = {5};
  CHECK_THROWS_WITH_AS(zaqlms::validate(c), doctest::Contains("system"), zaqlms::ConfigError);
  c = small_config();
  c.algorithms = {Algorithm::Qlms, Algorithm::Qlms};
  CHECK_THROWS_AS(zaqlms::validate(c), zaqlms::ConfigError);
}

TEST_CASE("drawn tap values are unit modulus and seed-determined") {
  const auto spec = zaqlms::resolve_system(small_config());
  REQUIRE(spec.tap_values.size() == 2);
  for (const auto& q : spec.tap_values) CHECK(zaqlms::norm(q) == doctest::Approx(1.0));
  CHECK(zaqlms::resolve_system(small_config()) == spec);

  ScenarioConfig fixed = small_config();
  fixed.tap_values = {zaqlms::Quaternion(0.5), zaqlms::Quaternion(0, 0, 0.25, 0)};
  CHECK(zaqlms::resolve_system(fixed).tap_values == fixed.tap_values);
}

TEST_CASE("realization wiring") {
  ScenarioConfig c = small_config();
  c.snr_db = std::numeric_limits<double>::infinity();
  c.tap_values = {zaqlms::Quaternion(1.0), zaqlms::Quaternion(0, 2, 0, 0)};
  const auto r = zaqlms::make_realization(c, 0);
  REQUIRE(r.input.size() == c.num_iterations);
  // d[n] = 1 * x[n-1] + 2i * x[n-3]
  CHECK(r.desired[0] == zaqlms::Quaternion{});
  for (std::size_t n = 3; n < 20; ++n) {
    const auto expected = r.input[n - 1] + zaqlms::Quaternion(0, 2, 0, 0) * r.input[n - 3];
    CHECK(zaqlms::max_abs_diff(r.desired[n], expected) < 1e-14);
  }
}

TEST_CASE("noiseless identification converges") {
  ScenarioConfig c = small_config();
  c.snr_db = std::numeric_limits<double>::infinity();
  c.num_iterations = 4000;
  c.mu = 0.05;
  c.rho = 0.0;
  c.coloring_len = 1;
  const auto sq = zaqlms::run_single(c, 0, Algorithm::Qlms);
  REQUIRE(sq.size() == 4000);
  const double initial = std::accumulate(sq.begin() + 4, sq.begin() + 14, 0.0) / 10.0;
  const double final = std::accumulate(sq.end() - 10, sq.end(), 0.0) / 10.0;
  CHECK(final < 1e-6 * initial);
}

TEST_CASE("single iteration sees the zero-padded regressor") {
  ScenarioConfig c = small_config();
  c.num_iterations = 1;
  c.snr_db = std::numeric_limits<double>::infinity();
  const auto sq = zaqlms::run_single(c, 0, Algorithm::ZaQlms);
  REQUIRE(sq.size() == 1);
  const auto r = zaqlms::make_realization(c, 0);
  CHECK(sq[0] == zaqlms::norm_sq(r.desired[0]));
}

TEST_CASE("run_single is deterministic and paired") {
  const ScenarioConfig c = small_config();
  CHECK(zaqlms::run_single(c, 2, Algorithm::ZaQlms) == zaqlms::run_single(c, 2, Algorithm::ZaQlms));
  CHECK(zaqlms::run_single(c, 2, Algorithm::ZaQlms) != zaqlms::run_single(c, 3, Algorithm::ZaQlms));

  const auto paired = zaqlms::run_paired(c, 2);
  CHECK(paired[0] == zaqlms::run_single(c, 2, Algorithm::Qlms));
  CHECK(paired[1] == zaqlms::run_single(c, 2, Algorithm::ZaQlms));
  // Same realization: before any weight is nonzero the two errors coincide.
  CHECK(paired[0][0] == paired[1][0]);
}

TEST_CASE("run_scenario averaging") {
  ScenarioConfig c = small_config();
  c.num_runs = 1;
  const auto one = zaqlms::run_scenario(c);
  REQUIRE(one.size() == 2);
  CHECK(one[0].algorithm == Algorithm::Qlms);
  CHECK(one[0].mse_linear == zaqlms::run_single(c, 0, Algorithm::Qlms));
  CHECK(one[1].mse_linear == zaqlms::run_single(c, 0, Algorithm::ZaQlms));

  c.num_runs = 5;
  c.algorithms = {Algorithm::ZaQlms};
  const auto avg = zaqlms::run_scenario(c);
  REQUIRE(avg.size() == 1);
  std::vector<double> manual(c.num_iterations, 0.0);
  for (std::size_t r = 0; r < 5; ++r) {
    const auto sq = zaqlms::run_single(c, r, Algorithm::ZaQlms);
    for (std::size_t n = 0; n < manual.size(); ++n) manual[n] += sq[n];
  }
  for (std::size_t n = 0; n < manual.size(); ++n) {
    CHECK(avg[0].mse_linear[n] == manual[n] / 5.0);
    CHECK(avg[0].mse_db[n] == 10.0 * std::log10(manual[n] / 5.0));
  }
}

TEST_CASE("averaging reduces the spread of the final MSE") {
  ScenarioConfig c = small_config();
  c.num_iterations = 150;
  std::vector<double> singles, averages;
  for (std::size_t g = 0; g < 10; ++g) {
    singles.push_back(zaqlms::run_single(c, g, Algorithm::Qlms).back());
    double sum = 0.0;
    for (std::size_t r = 0; r < 100; ++r) sum += zaqlms::run_single(c, 1000 + 100 * g + r, Algorithm::Qlms).back();
    averages.push_back(sum / 100.0);
  }
  CHECK(stddev(averages) < stddev(singles));
}

TEST_CASE("serial and parallel execution agree bit for bit") {
  ScenarioConfig c = small_config();
  c.num_runs = 9;
  const auto serial = zaqlms::run_scenario(c, {1});
  const auto parallel = zaqlms::run_scenario(c, {4});
  for (std::size_t a = 0; a < serial.size(); ++a) {
    CHECK(serial[a].mse_linear == parallel[a].mse_linear);
  }
}

TEST_CASE("rho = 0 makes the curves identical") {
  ScenarioConfig c = small_config();
  c.rho = 0.0;
  const auto curves = zaqlms::run_scenario(c);
  CHECK(curves[0].mse_linear == curves[1].mse_linear);
}

TEST_CASE("divergence aborts with the run index") {
  ScenarioConfig c = small_config();
  c.mu = 5.0;
  c.input_power = 10.0;
  try {
    zaqlms::run_scenario(c, {2});
    FAIL("expected divergence");
  } catch (const zaqlms::DivergenceError& e) {
    CHECK(e.run_index() == 0);
  }
}

TEST_CASE("steady_state_mse") {
  CHECK(zaqlms::steady_state_mse(curve_from_db(std::vector<double>(50, -12.5)), 0.2) == -12.5);
  const auto ramp = curve_from_db({0, -1, -2, -3, -4, -5, -6, -7, -8, -9});
  CHECK(zaqlms::steady_state_mse(ramp, 1.0) == doctest::Approx(-4.5));
  CHECK(zaqlms::steady_state_mse(ramp, 0.1) == -9.0);
  CHECK(zaqlms::steady_state_mse(ramp, 0.1) < zaqlms::steady_state_mse(ramp, 1.0));
  CHECK_THROWS_AS(zaqlms::steady_state_mse(ramp, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(zaqlms::steady_state_mse(ramp, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(zaqlms::steady_state_mse(ramp, 0.05), std::invalid_argument);
}

TEST_CASE("convergence_iteration") {
  CHECK_FALSE(zaqlms::convergence_iteration(curve_from_db(std::vector<double>(300, 5.0)), 0.0));
  CHECK(zaqlms::convergence_iteration(curve_from_db(std::vector<double>(300, -5.0)), 0.0) == 0u);

  std::vector<double> step(1000, 10.0);
  std::fill(step.begin() + 500, step.end(), -20.0);
  CHECK(zaqlms::convergence_iteration(curve_from_db(step), -17.0) == 500u);

  // A single dip followed by a rebound above threshold + 3 dB is not convergence.
  std::vector<double> dip(1000, 10.0);
  dip[100] = -20.0;
  std::fill(dip.begin() + 700, dip.end(), -20.0);
  CHECK(zaqlms::convergence_iteration(curve_from_db(dip), -17.0) == 700u);

  // Wobbles within the 3 dB band still count.
  std::vector<double> band(400, -20.0);
  for (std::size_t n = 0; n < band.size(); n += 2) band[n] = -18.0;
  CHECK(zaqlms::convergence_iteration(curve_from_db(band), -19.0) == 1u);
}
