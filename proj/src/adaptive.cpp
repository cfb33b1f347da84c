#include "zaqlms/adaptive.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zaqlms/errors.hpp"

namespace zaqlms {

namespace {

void validate(double mu, double rho) {
  if (!(std::isfinite(mu) && mu > 0.0)) {
    throw std::invalid_argument("mu must be a finite positive number");
  }
  if (!(std::isfinite(rho) && rho >= 0.0)) {
    throw std::invalid_argument("rho must be finite and non-negative");
  }
}

}  // namespace

FilterState::FilterState(std::size_t length, double mu, double rho)
    : FilterState(QVector(length), mu, rho) {}

FilterState::FilterState(QVector weights, double mu, double rho)
    : w_{std::move(weights)}, mu_{mu}, rho_{rho} {
  validate(mu, rho);
}

StepRecord FilterState::advance(const QVector& x, const Quaternion& d) {
  return update(x, d, rho_);
}

StepRecord FilterState::advance_qlms(const QVector& x, const Quaternion& d) {
  return update(x, d, 0.0);
}

StepRecord FilterState::update(const QVector& x, const Quaternion& d, double rho) {
  const Quaternion y = dot_t(w_, x);
  const Quaternion e = d - y;
  const Quaternion mu_e = mu_ * e;

  bool finite = true;
  for (std::size_t m = 0; m < w_.size(); ++m) {
    Quaternion next = w_[m] + mu_e * conj(x[m]);
    if (rho != 0.0) {
      // sgn of the pre-update weight
      next -= rho * sgn(w_[m]);
    }
    w_[m] = next;
    finite = finite && is_finite(next);
  }

  StepRecord record{y, e, iteration_};
  if (!finite) {
    throw DivergenceError("non-finite weight after iteration " + std::to_string(iteration_),
                          iteration_);
  }
  ++iteration_;
  return record;
}

std::pair<FilterState, StepRecord> step(FilterState state, const QVector& x, const Quaternion& d) {
  StepRecord record = state.advance(x, d);
  return {std::move(state), record};
}

std::pair<FilterState, StepRecord> step_qlms(FilterState state, const QVector& x,
                                             const Quaternion& d) {
  StepRecord record = state.advance_qlms(x, d);
  return {std::move(state), record};
}

double instantaneous_cost(const QVector& w, const QVector& x, const Quaternion& d, double gamma) {
  const Quaternion e = error(d, w, x);
  return (e * conj(e)).a + gamma * l1_norm(w);
}

QVector cost_gradient_conj(const QVector& w, const QVector& x, const Quaternion& d, double gamma) {
  const Quaternion e = error(d, w, x);
  QVector grad(w.size());
  for (std::size_t m = 0; m < w.size(); ++m) {
    grad[m] = -0.5 * (e * conj(x[m])) + 0.25 * gamma * sgn(w[m]);
  }
  return grad;
}

}  // namespace zaqlms
