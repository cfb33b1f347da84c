#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "zaqlms/qvector.hpp"

namespace zaqlms {

using Sequence = std::vector<Quaternion>;

/// Purpose tag of an RNG sub-stream.
enum class StreamId : std::uint32_t {
  Input = 1,
  Coloring = 2,
  System = 3,
  Noise = 4,
};

/// Reproducible random stream keyed by (seed, stream, run index).
///
/// The engine is seeded through std::seed_seq from all three keys, so a
/// stream's sequence depends only on its key and never on the order in which
/// other streams are drawn.
class RngStream {
 public:
  RngStream(std::uint64_t seed, StreamId stream, std::uint64_t run_index = 0);

  double gaussian(double variance);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Sparse FIR system: zeros except tap_values at active_taps (0-based).
struct SparseSystemSpec {
  std::size_t length = 1;
  std::vector<std::size_t> active_taps;
  std::vector<Quaternion> tap_values;

  bool operator==(const SparseSystemSpec&) const = default;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const SparseSystemSpec& spec);

/// n samples with i.i.d. N(0, sigma2/4) components, so E|q|^2 = sigma2.
Sequence white_qgauss(RngStream& rng, std::size_t n, double sigma2);

/// Random quaternion FIR taps normalized to unit energy sum |h_m|^2 = 1.
QVector gen_coloring_filter(RngStream& rng, std::size_t length);

/// As gen_coloring_filter but with real-valued taps.
QVector gen_real_coloring_filter(RngStream& rng, std::size_t length);

/// y[n] = sum_m h_m * input[n - m], zero before the first sample.
Sequence fir_filter(const QVector& h, const Sequence& input);

/// Mean of |q|^2 over the sequence.
double mean_power(const Sequence& s);

/// Rescales noise so that 10 log10(P_signal / P_noise) = snr_db, both powers
/// measured empirically. Throws std::invalid_argument on empty or unequal
/// lengths, zero signal power, or zero noise power.
Sequence scale_noise_to_snr(const Sequence& signal, const Sequence& noise, double snr_db);

QVector build_system(const SparseSystemSpec& spec);

/// Unit-modulus quaternion with uniformly distributed direction.
Quaternion random_unit_quaternion(RngStream& rng);

}  // namespace zaqlms
