#include "zaqlms/qcalculus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zaqlms/errors.hpp"

namespace zaqlms::qcalculus {

namespace {

double& component_ref(Quaternion& q, Component c) {
  switch (c) {
    case Component::A: return q.a;
    case Component::B: return q.b;
    case Component::C: return q.c;
    case Component::D: return q.d;
  }
  return q.a;
}

Quaternion evaluate(const QuaternionField& f, const QVector& w) {
  const Quaternion v = f(w);
  if (!is_finite(v)) {
    throw NonFiniteError("field evaluated to a non-finite value");
  }
  return v;
}

// sign = +1 gives d/dw*, sign = -1 gives d/dw.
QVector combine(const QuaternionField& f, const QVector& w, double h, double sign) {
  QVector out(w.size());
  for (std::size_t m = 0; m < w.size(); ++m) {
    const Quaternion da = partial(f, w, m, Component::A, h);
    const Quaternion db = partial(f, w, m, Component::B, h);
    const Quaternion dc = partial(f, w, m, Component::C, h);
    const Quaternion dd = partial(f, w, m, Component::D, h);
    // Units multiply from the right: (df/db) i, as written in the definition.
    out[m] = 0.25 * (da + sign * (db * Quaternion::i() + dc * Quaternion::j() +
                                  dd * Quaternion::k()));
  }
  return out;
}

}  // namespace

QuaternionField lift(ScalarField f) {
  return [f = std::move(f)](const QVector& w) { return Quaternion(f(w)); };
}

Quaternion partial(const QuaternionField& f, const QVector& w, std::size_t m, Component component,
                   double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  if (m >= w.size()) {
    throw std::invalid_argument("element index " + std::to_string(m) + " out of range");
  }
  QVector probe = w;
  double& slot = component_ref(probe[m], component);
  const double origin = slot;
  const double step = h * std::max(1.0, std::abs(origin));

  slot = origin + step;
  const Quaternion forward = evaluate(f, probe);
  slot = origin - step;
  const Quaternion backward = evaluate(f, probe);
  return (forward - backward) / (2.0 * step);
}

QVector num_grad(const QuaternionField& f, const QVector& w, double h) {
  return combine(f, w, h, -1.0);
}

QVector num_grad_conj(const QuaternionField& f, const QVector& w, double h) {
  return combine(f, w, h, 1.0);
}

double check_product_rule(const QuaternionField& f, const QuaternionField& g, const QVector& w,
                          std::size_t m, Component component, double h) {
  const QuaternionField fg = [&](const QVector& v) { return f(v) * g(v); };
  const Quaternion lhs = partial(fg, w, m, component, h);
  const Quaternion rhs =
      evaluate(f, w) * partial(g, w, m, component, h) + partial(f, w, m, component, h) * evaluate(g, w);
  return max_abs_diff(lhs, rhs);
}

}  // namespace zaqlms::qcalculus
