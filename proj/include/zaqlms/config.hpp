#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "zaqlms/experiment.hpp"

namespace zaqlms {

// Scenario files are flat, line-oriented `key = value` text. `#` starts a
// comment. Lists are comma-separated; quaternions use literals such as
// `0.5 + 0.5i - 0.5j + 0.5k`.
//
//   length          system length L                      (required)
//   active_taps     0-based indices of nonzero taps      (required)
//   tap_values      one quaternion per active tap        (default: drawn, unit modulus)
//   mu              step size                            (required)
//   rho             zero-attractor strength, mu * gamma  (required)
//   snr_db          observation SNR, `inf` = noiseless   (default 30)
//   num_iterations  samples per run                      (required)
//   num_runs        Monte-Carlo runs                     (required)
//   coloring_len    coloring FIR length                  (default 5)
//   coloring        `quaternion` or `real` taps          (default quaternion)
//   input_power     E|x|^2 of the white source           (default 1)
//   master_seed     unsigned 64-bit seed                 (default 0)
//   algorithms      subset of `qlms, za_qlms`            (default both)

/// Parses and validates a scenario. Throws ConfigError carrying the line and
/// column of the offending token, or naming the field for invariant failures.
ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a scenario file; a missing or unreadable file is a ConfigError.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(render_config(c)) == c for valid c.
std::string render_config(const ScenarioConfig& config);

}  // namespace zaqlms
