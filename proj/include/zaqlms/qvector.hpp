#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "zaqlms/quaternion.hpp"

namespace zaqlms {

/// Fixed-length column of quaternions (weight vectors, regressors).
///
/// The length is set at construction and never changes; element values may
/// be written through operator[]. Empty vectors are rejected.
class QVector {
 public:
  /// Zero vector of the given length (>= 1).
  explicit QVector(std::size_t length);
  QVector(std::initializer_list<Quaternion> elems);
  explicit QVector(std::vector<Quaternion> elems);

  std::size_t size() const noexcept { return elems_.size(); }

  const Quaternion& operator[](std::size_t m) const { return elems_[m]; }
  Quaternion& operator[](std::size_t m) { return elems_[m]; }

  std::span<const Quaternion> elems() const noexcept { return elems_; }
  std::span<Quaternion> elems() noexcept { return elems_; }

  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool operator==(const QVector&) const = default;

 private:
  std::vector<Quaternion> elems_;
};

QVector operator+(const QVector& u, const QVector& v);
QVector operator-(const QVector& u, const QVector& v);
QVector operator*(double r, const QVector& v);

/// w^T x = sum_m w_m * x_m, each product taken in the order w_m * x_m.
Quaternion dot_t(const QVector& w, const QVector& x);

/// Filter error d - w^T x.
Quaternion error(const Quaternion& d, const QVector& w, const QVector& x);

QVector conj_elems(const QVector& x);

/// Sum of element moduli, sum_m |w_m|.
double l1_norm(const QVector& w);

/// sqrt(sum_m |w_m|^2).
double l2_norm(const QVector& w);

QVector sgn_vec(const QVector& w);

/// alpha * u + v.
QVector axpy(double alpha, const QVector& u, const QVector& v);

bool is_finite(const QVector& v);

/// Largest absolute component difference over all elements.
double max_abs_diff(const QVector& u, const QVector& v);

}  // namespace zaqlms
