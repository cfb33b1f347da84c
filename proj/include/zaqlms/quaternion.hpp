#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

namespace zaqlms {

/// Quaternion q = a + bi + cj + dk with 64-bit real components.
///
/// Plain value type. Arithmetic never checks finiteness; callers that need to
/// detect overflow or NaN propagation use is_finite().
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : a{real} {}  // NOLINT: implicit real embedding
  constexpr Quaternion(double a_, double b_, double c_, double d_) : a{a_}, b{b_}, c{c_}, d{d_} {}

  constexpr bool operator==(const Quaternion&) const = default;

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}

constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}

constexpr Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b, -q.c, -q.d}; }

constexpr Quaternion operator*(double r, const Quaternion& q) {
  return {r * q.a, r * q.b, r * q.c, r * q.d};
}

constexpr Quaternion operator*(const Quaternion& q, double r) { return r * q; }

constexpr Quaternion operator/(const Quaternion& q, double r) {
  return {q.a / r, q.b / r, q.c / r, q.d / r};
}

// Hamilton product: ij = k, jk = i, ki = j, i^2 = j^2 = k^2 = -1.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

constexpr Quaternion& operator+=(Quaternion& p, const Quaternion& q) { return p = p + q; }
constexpr Quaternion& operator-=(Quaternion& p, const Quaternion& q) { return p = p - q; }

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }
constexpr Quaternion add(const Quaternion& p, const Quaternion& q) { return p + q; }
constexpr Quaternion sub(const Quaternion& p, const Quaternion& q) { return p - q; }
constexpr Quaternion scale(double r, const Quaternion& q) { return r * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

/// |q|^2 = a^2 + b^2 + c^2 + d^2.
constexpr double norm_sq(const Quaternion& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

/// |q|. Rescales when |q|^2 would underflow or overflow, so tiny nonzero
/// quaternions keep a nonzero modulus.
inline double norm(const Quaternion& q) {
  const double s = norm_sq(q);
  if (s > 1e-290 && s < 1e290) {
    return std::sqrt(s);
  }
  const double m = std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c), std::abs(q.d)});
  if (m == 0.0 || !std::isfinite(m)) {
    return m;
  }
  return m * std::sqrt(norm_sq(q / m));
}

/// q/|q| for q != 0, exactly zero for q == 0. The zero test is exact on
/// purpose: the zero attractor leaves exactly-zero weights untouched.
inline Quaternion sgn(const Quaternion& q) {
  const double n = norm(q);
  if (n == 0.0) {
    return {};
  }
  return q / n;
}

inline bool is_finite(const Quaternion& q) {
  return std::isfinite(q.a) && std::isfinite(q.b) && std::isfinite(q.c) && std::isfinite(q.d);
}

/// Largest absolute component difference.
double max_abs_diff(const Quaternion& p, const Quaternion& q);

/// Renders as "a + bi + cj + dk" with shortest round-trip precision,
/// e.g. "1 - 2i + 0j + 0.5k".
std::string to_string(const Quaternion& q);

/// Parses quaternion literals such as "1 + 2i - 3j + 4k", "-0.2j+0.2k", "2k",
/// "i" or "3e-7". Each unit may appear at most once; omitted parts are zero.
/// Throws ParseError on malformed or non-finite input.
Quaternion parse_quaternion(std::string_view text);

}  // namespace zaqlms
