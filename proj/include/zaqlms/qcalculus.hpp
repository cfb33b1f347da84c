#pragma once

#include <cstddef>
#include <functional>

#include "zaqlms/qvector.hpp"

namespace zaqlms::qcalculus {

// Central-difference evaluation of the quaternion derivatives
//
//   df/dw_m  = 1/4 (df/da_m - df/db_m i - df/dc_m j - df/dd_m k)
//   df/dw*_m = 1/4 (df/da_m + df/db_m i + df/dc_m j + df/dd_m k)
//
// for w_m = a_m + b_m i + c_m j + d_m k. Used as an oracle for closed-form
// gradients; nothing on the filtering path depends on it.

using QuaternionField = std::function<Quaternion(const QVector&)>;
using ScalarField = std::function<double(const QVector&)>;

enum class Component { A, B, C, D };

inline constexpr double kDefaultStep = 1e-5;

/// Lifts a real-valued field into a quaternion-valued one (zero imaginary part).
QuaternionField lift(ScalarField f);

/// Central difference of f along one real component of element m. The step
/// is h * max(1, |component|). Throws NonFiniteError if f is non-finite at
/// either probe, std::invalid_argument for h <= 0 or m out of range.
Quaternion partial(const QuaternionField& f, const QVector& w, std::size_t m, Component component,
                   double h = kDefaultStep);

/// Numerical df/dw.
QVector num_grad(const QuaternionField& f, const QVector& w, double h = kDefaultStep);

/// Numerical df/dw*.
QVector num_grad_conj(const QuaternionField& f, const QVector& w, double h = kDefaultStep);

/// Max-component residual between d(fg)/dq and f * dg/dq + df/dq * g for one
/// real component q of element m, all three partials taken numerically.
double check_product_rule(const QuaternionField& f, const QuaternionField& g, const QVector& w,
                          std::size_t m, Component component, double h = kDefaultStep);

}  // namespace zaqlms::qcalculus
