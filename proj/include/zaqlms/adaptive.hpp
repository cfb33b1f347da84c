#pragma once

#include <cstddef>
#include <utility>

#include "zaqlms/qvector.hpp"

namespace zaqlms {

/// Output and a-priori error of one filter step.
struct StepRecord {
  Quaternion y;
  Quaternion e;
  std::size_t iteration = 0;
};

/// Weights and hyperparameters of one QLMS / ZA-QLMS filter.
///
/// Update rule (zero-attracting QLMS):
///
///   e[n]     = d[n] - w^T[n] x[n]
///   w[n + 1] = w[n] + mu * e[n] x*[n] - rho * sgn(w[n])
///
/// with the product taken as e[n] * conj(x_m) for every element. rho = 0 is
/// plain QLMS; the attractor term is then skipped entirely so both forms
/// produce identical bits.
class FilterState {
 public:
  /// Zero-initialized weights of the given length. Throws
  /// std::invalid_argument unless mu > 0 and rho >= 0 (both finite).
  FilterState(std::size_t length, double mu, double rho);
  FilterState(QVector weights, double mu, double rho);

  const QVector& weights() const noexcept { return w_; }
  double mu() const noexcept { return mu_; }
  double rho() const noexcept { return rho_; }
  std::size_t length() const noexcept { return w_.size(); }
  std::size_t iteration() const noexcept { return iteration_; }
  bool is_qlms() const noexcept { return rho_ == 0.0; }

  /// Advances one iteration in place. Throws LengthMismatch if x has the
  /// wrong length and DivergenceError if any weight becomes non-finite (the
  /// state is left at the offending weights).
  StepRecord advance(const QVector& x, const Quaternion& d);

  /// As advance() with the attractor disabled regardless of rho.
  StepRecord advance_qlms(const QVector& x, const Quaternion& d);

 private:
  StepRecord update(const QVector& x, const Quaternion& d, double rho);

  QVector w_;
  double mu_;
  double rho_;
  std::size_t iteration_ = 0;
};

/// Value-returning ZA-QLMS step.
std::pair<FilterState, StepRecord> step(FilterState state, const QVector& x, const Quaternion& d);

/// Value-returning QLMS step (rho treated as 0).
std::pair<FilterState, StepRecord> step_qlms(FilterState state, const QVector& x,
                                             const Quaternion& d);

/// Instantaneous cost J0 = e e* + gamma * ||w||_1.
double instantaneous_cost(const QVector& w, const QVector& x, const Quaternion& d, double gamma);

/// Closed-form conjugate gradient of J0 with respect to w*:
/// -1/2 e x* + 1/4 gamma sgn(w), elementwise products e * conj(x_m).
QVector cost_gradient_conj(const QVector& w, const QVector& x, const Quaternion& d, double gamma);

}  // namespace zaqlms
