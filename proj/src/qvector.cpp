#include "zaqlms/qvector.hpp"

#include <algorithm>
#include <stdexcept>

#include "zaqlms/errors.hpp"

namespace zaqlms {

namespace {

void require_same_length(const QVector& u, const QVector& v) {
  if (u.size() != v.size()) {
    throw LengthMismatch(u.size(), v.size());
  }
}

}  // namespace

QVector::QVector(std::size_t length) : elems_(length) {
  if (length == 0) {
    throw std::invalid_argument("QVector length must be at least 1");
  }
}

QVector::QVector(std::initializer_list<Quaternion> elems) : QVector(std::vector<Quaternion>(elems)) {}

QVector::QVector(std::vector<Quaternion> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) {
    throw std::invalid_argument("QVector length must be at least 1");
  }
}

QVector operator+(const QVector& u, const QVector& v) { return axpy(1.0, u, v); }

QVector operator-(const QVector& u, const QVector& v) { return axpy(-1.0, v, u); }

QVector operator*(double r, const QVector& v) {
  QVector out(v.size());
  for (std::size_t m = 0; m < v.size(); ++m) {
    out[m] = r * v[m];
  }
  return out;
}

Quaternion dot_t(const QVector& w, const QVector& x) {
  require_same_length(w, x);
  Quaternion acc;
  for (std::size_t m = 0; m < w.size(); ++m) {
    acc += w[m] * x[m];
  }
  return acc;
}

Quaternion error(const Quaternion& d, const QVector& w, const QVector& x) {
  return d - dot_t(w, x);
}

QVector conj_elems(const QVector& x) {
  QVector out(x.size());
  std::transform(x.begin(), x.end(), out.elems().begin(),
                 [](const Quaternion& q) { return conj(q); });
  return out;
}

double l1_norm(const QVector& w) {
  double total = 0.0;
  for (const auto& q : w) {
    total += norm(q);
  }
  return total;
}

double l2_norm(const QVector& w) {
  double total = 0.0;
  for (const auto& q : w) {
    total += norm_sq(q);
  }
  return std::sqrt(total);
}

QVector sgn_vec(const QVector& w) {
  QVector out(w.size());
  std::transform(w.begin(), w.end(), out.elems().begin(),
                 [](const Quaternion& q) { return sgn(q); });
  return out;
}

QVector axpy(double alpha, const QVector& u, const QVector& v) {
  require_same_length(u, v);
  QVector out(u.size());
  for (std::size_t m = 0; m < u.size(); ++m) {
    out[m] = alpha * u[m] + v[m];
  }
  return out;
}

bool is_finite(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Quaternion& q) { return is_finite(q); });
}

double max_abs_diff(const QVector& u, const QVector& v) {
  require_same_length(u, v);
  double worst = 0.0;
  for (std::size_t m = 0; m < u.size(); ++m) {
    worst = std::max(worst, max_abs_diff(u[m], v[m]));
  }
  return worst;
}

}  // namespace zaqlms
