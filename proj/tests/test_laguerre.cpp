#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "rabi/laguerre.hpp"
#include "rabi/tridiag.hpp"

using namespace rabi;

TEST_CASE("recurrence evaluation matches the explicit sum") {
  for (unsigned N : {1u, 2u, 5u, 10u, 20u}) {
    for (double x : {0.0, 0.3, 1.0, 4.5, 12.0}) {
      CAPTURE(N);
      CAPTURE(x);
      mpq_class exact = 0, pow = 1;
      for (unsigned m = 0; m <= N; ++m, pow *= mpq_class(x)) exact += oracle::laguerre_coefficient(N, m) * pow;
      const double ref = exact.get_d();
      CHECK(std::abs(laguerre_eval(N, x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
  CHECK(laguerre_eval(0, 3.0) == 1.0);
  CHECK(laguerre_eval(1, 3.0) == -2.0);
}

TEST_CASE("exact coefficients") {
  const auto c = laguerre_coefficients(3);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == 1);
  CHECK(c[1] == -3);
  CHECK(c[2] == mpq_class(3, 2));
  CHECK(c[3] == mpq_class(-1, 6));
  for (unsigned N = 1; N <= 25; ++N)
    for (unsigned m = 0; m <= N; ++m) CHECK(laguerre_coefficients(N)[m] == oracle::laguerre_coefficient(N, m));
}

TEST_CASE("zeros of small and moderate order") {
  const auto z1 = zeros_newton(1, 1e-15);
  REQUIRE(z1.zeros.size() == 1);
  CHECK(z1.zeros[0] == doctest::Approx(1.0));
  const auto z2 = zeros_newton(2, 1e-15);
  CHECK(z2.zeros[0] == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(z2.zeros[1] == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-14));
  const auto z20 = zeros_newton(20, 1e-15);
  CHECK(z20.zeros.front() == doctest::Approx(0.070539889691988753).epsilon(1e-13));
  CHECK(z20.zeros.back() == doctest::Approx(66.524416525615754).epsilon(1e-13));
}

TEST_CASE("Newton zeros agree with the eigenvalue route") {
  for (unsigned N : {3u, 17u, 64u, 200u, 500u}) {
    const auto z = zeros_newton(N, 1e-14).zeros;
    const auto e = all_eigenvalues(build_M(N), 1e-13);
    REQUIRE(z.size() == N);
    for (unsigned k = 0; k < N; ++k) {
      CAPTURE(N);
      CAPTURE(k);
      CHECK(std::abs(z[k] - e[k]) <= 1e-10 * std::max(1.0, e[k]));
    }
  }
}

TEST_CASE("zeros of consecutive orders interlace") {
  for (unsigned N = 2; N <= 60; ++N) {
    const auto a = zeros_newton(N - 1, 1e-14).zeros;
    const auto b = zeros_newton(N, 1e-14).zeros;
    for (unsigned k = 0; k + 1 < N; ++k) {
      CHECK(b[k] < a[k]);
      CHECK(a[k] < b[k + 1]);
    }
  }
}

TEST_CASE("counting zeros below a threshold") {
  CHECK(count_below(20, 1.0) == 3);
  CHECK(count_below(1, 0.5) == 0);
  CHECK(count_below(1, 1.0) == 1);
  CHECK_THROWS_AS(count_below(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(count_below(5, -1.0), std::invalid_argument);
}

TEST_CASE("counting function approaches its square-root limit") {
  CHECK(zero_density_limit(1.0) == doctest::Approx(2.0 / M_PI));
  struct Case {
    std::size_t N;
    double x, tol;
  };
  for (const auto& c : {Case{100, 1.0, 0.25}, Case{10000, 1.0, 0.05}, Case{10000, 4.0, 0.05}, Case{1000000, 1.0, 0.02}}) {
    const double ratio = static_cast<double>(count_below(c.N, c.x)) /
                         (std::sqrt(static_cast<double>(c.N)) * zero_density_limit(c.x));
    CAPTURE(c.N);
    CAPTURE(c.x);
    CHECK(std::abs(ratio - 1.0) <= c.tol);
  }
}
