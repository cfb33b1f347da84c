#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "zaqlms/errors.hpp"
#include "zaqlms/quaternion.hpp"

using zaqlms::Quaternion;

namespace {
constexpr Quaternion I = Quaternion::i();
constexpr Quaternion J = Quaternion::j();
constexpr Quaternion K = Quaternion::k();
}  // namespace

TEST_CASE("unit products follow the Hamilton table") {
  CHECK(I * J == K);
  CHECK(J * K == I);
  CHECK(K * I == J);
  CHECK(J * I == -K);
  CHECK(I * I == Quaternion(-1.0));
  CHECK(I * J * K == Quaternion(-1.0));

  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(oracle::unit(r) * oracle::unit(c) == oracle::expand_mul(oracle::unit(r), oracle::unit(c)));
    }
  }
}

TEST_CASE("mul agrees with the brute-force basis expansion") {
  // (2k)(1 - i) = 2k - 2ki = -2j + 2k
  const Quaternion p{0, 0, 0, 2};
  const Quaternion q{1, -1, 0, 0};
  CHECK(oracle::expand_mul(p, q) == Quaternion(0, 0, -2, 2));
  CHECK(zaqlms::mul(p, q) == Quaternion(0, 0, -2, 2));

  oracle::Sampler s(7);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion a = s.quaternion(3.0);
    const Quaternion b = s.quaternion(3.0);
    CHECK(zaqlms::max_abs_diff(a * b, oracle::expand_mul(a, b)) < 1e-14);
  }
}

TEST_CASE("identity and field operations") {
  const Quaternion q{1.5, -2, 0.25, 4};
  CHECK(Quaternion(1.0) * q == q);
  CHECK(q * Quaternion(1.0) == q);
  CHECK(q + Quaternion{} == q);
  CHECK(q - q == Quaternion{});
  CHECK(zaqlms::scale(2.0, Quaternion(1, 1, 0, 0)) == Quaternion(2, 2, 0, 0));
}

TEST_CASE("conjugate") {
  CHECK(zaqlms::conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4));
  oracle::Sampler s(11);
  for (int t = 0; t < 200; ++t) {
    const Quaternion q = s.quaternion(2.0);
    CHECK(zaqlms::conj(zaqlms::conj(q)) == q);
    const Quaternion qq = oracle::expand_mul(q, zaqlms::conj(q));
    const Quaternion lib = q * zaqlms::conj(q);
    CHECK(lib.a == doctest::Approx(zaqlms::norm_sq(q)).epsilon(1e-14));
    CHECK(zaqlms::max_abs_diff(lib, qq) < 1e-14);
    CHECK(std::abs(lib.b) < 1e-15);
    CHECK(std::abs(lib.c) < 1e-15);
    CHECK(std::abs(lib.d) < 1e-15);
  }
}

TEST_CASE("norm and sgn") {
  CHECK(zaqlms::norm(Quaternion(1, 2, 2, 0)) == 3.0);
  CHECK(zaqlms::norm(Quaternion{}) == 0.0);
  CHECK(zaqlms::sgn(Quaternion{}) == Quaternion{});
  CHECK(zaqlms::sgn(3.0 * I) == I);
  const Quaternion s = zaqlms::sgn(Quaternion(1, 2, 2, 0));
  CHECK(zaqlms::max_abs_diff(s, Quaternion(1.0 / 3, 2.0 / 3, 2.0 / 3, 0)) < 1e-15);

  // Exact zero test: a tiny nonzero value still maps to unit modulus.
  CHECK(zaqlms::norm(zaqlms::sgn(Quaternion(1e-200, 0, 0, 0))) == doctest::Approx(1.0));
}

TEST_CASE("non-finite arithmetic is detectable") {
  const Quaternion big{1e200, 0, 0, 0};
  CHECK(zaqlms::is_finite(big));
  CHECK_FALSE(zaqlms::is_finite(big * big));
  CHECK_FALSE(zaqlms::is_finite(Quaternion(0, std::nan(""), 0, 0)));
}

TEST_CASE("text rendering round-trips") {
  CHECK(zaqlms::to_string(Quaternion(1, -2, 3, -4)) == "1 - 2i + 3j - 4k");
  CHECK(zaqlms::to_string(Quaternion(0.1, 0, 0, 0)) == "0.1 + 0i + 0j + 0k");

  oracle::Sampler s(3);
  for (int t = 0; t < 500; ++t) {
    const Quaternion q = s.quaternion(1e3) * s.uniform(1e-9, 1.0);
    CHECK(zaqlms::parse_quaternion(zaqlms::to_string(q)) == q);
  }
}

TEST_CASE("parsing literal forms") {
  using zaqlms::parse_quaternion;
  CHECK(parse_quaternion("2k") == Quaternion(0, 0, 0, 2));
  CHECK(parse_quaternion("-0.2j+0.2k") == Quaternion(0, 0, -0.2, 0.2));
  CHECK(parse_quaternion("i") == I);
  CHECK(parse_quaternion("-k") == -K);
  CHECK(parse_quaternion("3e-7") == Quaternion(3e-7));
  CHECK(parse_quaternion(" 1 + 2i + 3j + 4k ") == Quaternion(1, 2, 3, 4));
  CHECK(parse_quaternion("4k + 1") == Quaternion(1, 0, 0, 4));

  CHECK_THROWS_AS(parse_quaternion(""), zaqlms::ParseError);
  CHECK_THROWS_AS(parse_quaternion("1 + "), zaqlms::ParseError);
  CHECK_THROWS_AS(parse_quaternion("1 2i"), zaqlms::ParseError);
  CHECK_THROWS_AS(parse_quaternion("i + 2i"), zaqlms::ParseError);
  CHECK_THROWS_AS(parse_quaternion("1 + x"), zaqlms::ParseError);
  CHECK_THROWS_AS(parse_quaternion("1 - -2i"), zaqlms::ParseError);
  CHECK_THROWS_AS(parse_quaternion("1e400"), zaqlms::ParseError);

  try {
    parse_quaternion("1 + 2q");
    FAIL("expected a parse error");
  } catch (const zaqlms::ParseError& e) {
    CHECK(e.column() == 6);
  }
}

TEST_CASE("algebraic properties on random samples") {
  oracle::Sampler s(2024);
  for (int t = 0; t < 2000; ++t) {
    const Quaternion p = s.quaternion();
    const Quaternion q = s.quaternion();
    const Quaternion r = s.quaternion();
    CHECK(zaqlms::max_abs_diff((p * q) * r, p * (q * r)) < 1e-12);
    CHECK(zaqlms::max_abs_diff(zaqlms::conj(p * q), zaqlms::conj(q) * zaqlms::conj(p)) < 1e-12);
    const double lhs = zaqlms::norm(p * q);
    const double rhs = zaqlms::norm(p) * zaqlms::norm(q);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
    CHECK(std::abs(zaqlms::norm(zaqlms::sgn(p)) - 1.0) < 1e-12);
  }
}

TEST_CASE("sgn has unit modulus across magnitudes") {
  oracle::Sampler s(404);
  for (int t = 0; t < 2000; ++t) {
    const double scale = std::pow(10.0, s.uniform(-299.0, 300.0));
    Quaternion q = s.quaternion();
    if (zaqlms::norm(q) == 0.0) continue;
    q = (scale / zaqlms::norm(q)) * q;
    CHECK(std::abs(zaqlms::norm(zaqlms::sgn(q)) - 1.0) < 1e-12);
  }
}
