#include "diamond/numeric.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace diamond;

TEST_CASE("jacobi leaves a diagonal matrix alone") {
  CMat<3> a{};
  a[0][0] = 3.0;
  a[1][1] = -1.0;
  a[2][2] = 0.5;
  const auto e = jacobi_eigh<3>(a);
  CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(e.values[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(e.values[2] == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("jacobi reproduces a known complex 2x2 spectrum") {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3
  CMat<2> a{};
  a[0][0] = 2.0;
  a[0][1] = cplx(0, 1);
  a[1][0] = cplx(0, -1);
  a[1][1] = 2.0;
  const auto e = jacobi_eigh<2>(a);
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("jacobi eigenpairs satisfy the defining equation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    CMat<4> a{};
    for (int i = 0; i < 4; ++i) {
      a[i][i] = uniform(rng, -2, 2);
      for (int j = i + 1; j < 4; ++j) {
        a[i][j] = cplx(uniform(rng, -2, 2), uniform(rng, -2, 2));
        a[j][i] = std::conj(a[i][j]);
      }
    }
    const auto e = jacobi_eigh<4>(a);

    for (int k = 0; k < 4; ++k) {
      // residual || A v - lambda v ||
      double resid = 0;
      for (int i = 0; i < 4; ++i) {
        cplx av = 0;
        for (int j = 0; j < 4; ++j)
          av += a[i][j] * e.vectors[k][j];
        resid += std::norm(av - e.values[k] * e.vectors[k][i]);
      }
      CHECK(std::sqrt(resid) <= 1e-12);
    }
    // orthonormal basis
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) {
        cplx dot = 0;
        for (int i = 0; i < 4; ++i)
          dot += std::conj(e.vectors[k][i]) * e.vectors[l][i];
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) <= 1e-12);
      }
    CHECK(e.values[0] <= e.values[1]);
    CHECK(e.values[1] <= e.values[2]);
    CHECK(e.values[2] <= e.values[3]);
  }
}

TEST_CASE("trace norm sums absolute eigenvalues") {
  CMat<2> a{};
  a[0][0] = 1.0;
  a[1][1] = -2.0;
  CHECK(trace_norm_hermitian<2>(a) == doctest::Approx(3.0).epsilon(1e-15));

  // rank-one projector minus half identity: eigenvalues +-1/2
  CMat<2> b{};
  b[0][0] = 0.0;
  b[0][1] = 0.5;
  b[1][0] = 0.5;
  b[1][1] = 0.0;
  CHECK(trace_norm_hermitian<2>(b) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("log_sum_exp handles offsets and empty input") {
  const double xs[] = {std::log(1.0), std::log(2.0), std::log(3.0)};
  CHECK(log_sum_exp(xs) == doctest::Approx(std::log(6.0)).epsilon(1e-15));

  const double shifted[] = {1000.0, 1000.0 + std::log(2.0)};
  CHECK(log_sum_exp(shifted) == doctest::Approx(1000.0 + std::log(3.0)).epsilon(1e-15));

  CHECK(log_sum_exp(std::span<const double>{}) ==
        -std::numeric_limits<double>::infinity());

  const double with_ninf[] = {-std::numeric_limits<double>::infinity(), 0.0};
  CHECK(log_sum_exp(with_ninf) == doctest::Approx(0.0));

  CHECK(log_sum_exp(3.0, 3.0) == doctest::Approx(3.0 + std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("bisect finds a root and rejects bad brackets") {
  const double root = bisect([](double x) { return std::cos(x); }, 0.0, 2.0, 1e-12);
  CHECK(root == doctest::Approx(1.5707963267948966).epsilon(1e-10));

  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1; }, -1.0, 1.0, 1e-8),
                  std::invalid_argument);

  // exact zero at an endpoint is returned as-is
  CHECK(bisect([](double x) { return x; }, 0.0, 1.0, 1e-8) == 0.0);
}

TEST_CASE("golden section locates a quadratic maximum") {
  const double peak =
      golden_section_max([](double x) { return -(x - 1.3) * (x - 1.3); }, 0.0, 2.0, 1e-9);
  CHECK(peak == doctest::Approx(1.3).epsilon(1e-6));
}

TEST_CASE("parabolic peak recovers an exact vertex") {
  // y = -(x-1.25)^2 sampled at 1.0, 1.5, 2.0
  const auto f = [](double x) { return -(x - 1.25) * (x - 1.25); };
  const double x = parabolic_peak(1.0, 0.5, f(1.0), f(1.5), f(2.0));
  CHECK(x == doctest::Approx(1.25).epsilon(1e-12));

  // flat samples must stay inside the window
  const double flat = parabolic_peak(1.0, 0.5, 2.0, 2.0, 2.0);
  CHECK(flat >= 1.0);
  CHECK(flat <= 2.0);
}

TEST_CASE("uniform draws are deterministic and in range") {
  std::mt19937_64 a(123), b(123);
  for (int k = 0; k < 100; ++k) {
    const double va = uniform(a, -3, 3);
    CHECK(va == uniform(b, -3, 3));
    CHECK(va >= -3.0);
    CHECK(va < 3.0);
  }
}
