#include "zaqlms/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zaqlms {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, StreamId stream, std::uint64_t run_index) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream),
                       static_cast<std::uint32_t>(run_index),
                       static_cast<std::uint32_t>(run_index >> 32)};
}

std::mt19937_64 make_engine(std::uint64_t seed, StreamId stream, std::uint64_t run_index) {
  auto seq = make_seed_seq(seed, stream, run_index);
  return std::mt19937_64(seq);
}

QVector normalized(QVector h) {
  const double energy = l2_norm(h);
  if (energy == 0.0) {
    throw std::runtime_error("degenerate coloring filter draw");
  }
  return (1.0 / energy) * h;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, StreamId stream, std::uint64_t run_index)
    : engine_{make_engine(seed, stream, run_index)} {}

double RngStream::gaussian(double variance) { return std::sqrt(variance) * normal_(engine_); }

void validate(const SparseSystemSpec& spec) {
  if (spec.length == 0) {
    throw std::invalid_argument("system length must be at least 1");
  }
  if (spec.active_taps.empty()) {
    throw std::invalid_argument("system needs at least one active tap");
  }
  if (spec.active_taps.size() != spec.tap_values.size()) {
    throw std::invalid_argument("active_taps and tap_values differ in length");
  }
  for (std::size_t t = 0; t < spec.active_taps.size(); ++t) {
    if (spec.active_taps[t] >= spec.length) {
      throw std::invalid_argument("active tap " + std::to_string(spec.active_taps[t]) +
                                  " is outside a system of length " +
                                  std::to_string(spec.length));
    }
    if (t > 0 && spec.active_taps[t] <= spec.active_taps[t - 1]) {
      throw std::invalid_argument("active taps must be strictly increasing");
    }
    if (!is_finite(spec.tap_values[t])) {
      throw std::invalid_argument("tap values must be finite");
    }
  }
}

Sequence white_qgauss(RngStream& rng, std::size_t n, double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("sigma2 must be positive");
  }
  const double component_var = sigma2 / 4.0;
  Sequence out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    // Sequenced explicitly: argument evaluation order is unspecified.
    const double a = rng.gaussian(component_var);
    const double b = rng.gaussian(component_var);
    const double c = rng.gaussian(component_var);
    const double d = rng.gaussian(component_var);
    out.emplace_back(a, b, c, d);
  }
  return out;
}

QVector gen_coloring_filter(RngStream& rng, std::size_t length) {
  QVector h(length);
  const Sequence taps = white_qgauss(rng, length, 4.0);
  for (std::size_t m = 0; m < length; ++m) {
    h[m] = taps[m];
  }
  return normalized(std::move(h));
}

QVector gen_real_coloring_filter(RngStream& rng, std::size_t length) {
  QVector h(length);
  for (std::size_t m = 0; m < length; ++m) {
    h[m] = Quaternion(rng.gaussian(1.0));
  }
  return normalized(std::move(h));
}

Sequence fir_filter(const QVector& h, const Sequence& input) {
  Sequence out(input.size());
  for (std::size_t n = 0; n < input.size(); ++n) {
    Quaternion acc;
    const std::size_t taps = std::min(h.size(), n + 1);
    for (std::size_t m = 0; m < taps; ++m) {
      acc += h[m] * input[n - m];
    }
    out[n] = acc;
  }
  return out;
}

double mean_power(const Sequence& s) {
  if (s.empty()) {
    return 0.0;
  }
  double total = 0.0;
  for (const auto& q : s) {
    total += norm_sq(q);
  }
  return total / static_cast<double>(s.size());
}

Sequence scale_noise_to_snr(const Sequence& signal, const Sequence& noise, double snr_db) {
  if (signal.empty() || signal.size() != noise.size()) {
    throw std::invalid_argument("signal and noise must be nonempty and of equal length");
  }
  if (!std::isfinite(snr_db)) {
    throw std::invalid_argument("snr_db must be finite");
  }
  const double p_signal = mean_power(signal);
  const double p_noise = mean_power(noise);
  if (p_signal == 0.0) {
    throw std::invalid_argument("signal power is zero; SNR is undefined");
  }
  if (p_noise == 0.0) {
    throw std::invalid_argument("noise power is zero; cannot rescale");
  }
  const double target = p_signal / std::pow(10.0, snr_db / 10.0);
  const double gain = std::sqrt(target / p_noise);
  Sequence out(noise.size());
  for (std::size_t n = 0; n < noise.size(); ++n) {
    out[n] = gain * noise[n];
  }
  return out;
}

QVector build_system(const SparseSystemSpec& spec) {
  validate(spec);
  QVector w(spec.length);
  for (std::size_t t = 0; t < spec.active_taps.size(); ++t) {
    w[spec.active_taps[t]] = spec.tap_values[t];
  }
  return w;
}

Quaternion random_unit_quaternion(RngStream& rng) {
  for (;;) {
    const double a = rng.gaussian(1.0);
    const double b = rng.gaussian(1.0);
    const double c = rng.gaussian(1.0);
    const double d = rng.gaussian(1.0);
    const Quaternion q{a, b, c, d};
    if (norm(q) > 0.0) {
      return sgn(q);
    }
  }
}

}  // namespace zaqlms
