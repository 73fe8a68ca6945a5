#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rabi/constraint_poly.hpp"
#include "rabi/gfunction.hpp"
#include "rabi/juddian.hpp"
#include "rabi/laguerre.hpp"

using namespace rabi;

TEST_CASE("branches run from a Laguerre zero to a square on the y axis") {
  for (unsigned n = 1; n <= 50; ++n) {
    const auto lam = zeros_newton(n, 1e-14).zeros;
    for (unsigned m : {1u, (n + 1) / 2, n}) {
      const auto b = trace_branch(n, m, 11);
      REQUIRE(b.points.size() == 11);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(std::abs(b.points.front().x - lam[m - 1]) <= 1e-6 * std::max(1.0, lam[m - 1]));
      CHECK(b.points.front().y == 0.0);
      CHECK(std::abs(b.points.back().x) <= 1e-6 * m * m);
      CHECK(b.points.back().y == double(m) * m);
    }
  }
}

TEST_CASE("branches of one locus are disjoint") {
  const unsigned n = 12;
  // Sampled on the same y grid over [0, 1], branch values are strictly ordered.
  std::vector<Branch> bs;
  for (unsigned m = 1; m <= n; ++m) bs.push_back(trace_branch(n, m, 2 * m * m + 1));
  for (std::size_t j = 0; j <= 2; ++j) {
    for (unsigned m = 1; m < n; ++m) {
      const auto& lo = bs[m - 1].points[j];
      const auto& hi = bs[m].points[j];
      CHECK(lo.y == hi.y);
      CHECK(lo.x < hi.x);
    }
  }
  CHECK_THROWS_AS(trace_branch(3, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(trace_branch(3, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(trace_branch(3, 1, 1), std::invalid_argument);
  CHECK(branch_csv(trace_branch(1, 1, 2)) == "y,x\n0,1\n1,0\n");
}

TEST_CASE("first double points for m = 1") {
  CHECK(find_double_juddian(1, 7).empty());
  const auto p8 = find_double_juddian(1, 8);
  REQUIRE(p8.size() == 1);
  CHECK(p8[0].branch_index == 2);
  CHECK(p8[0].x + p8[0].y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p8[0].residual_m <= 1e-9);
  CHECK(p8[0].residual_N <= 1e-9);
  CHECK(find_double_juddian(1, 20).size() == 2);
  CHECK_THROWS_AS(find_double_juddian(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_double_juddian(0, 5), std::invalid_argument);
}

TEST_CASE("count law for m = 1") {
  for (unsigned N = 2; N <= 30; ++N) {
    const auto pts = find_double_juddian(1, N);
    CAPTURE(N);
    CHECK(pts.empty() == (N < 8));
    for (const auto& p : pts) {
      CHECK(p.residual_m <= 1e-9);
      CHECK(p.residual_N <= 1e-9);
      CHECK(p.x > 0.0);
      CHECK(p.y > 0.0);
      CHECK(p.y < 1.0);
    }
    CHECK(verify_distinctness(pts));
  }
}

TEST_CASE("exact line crossings agree with the eigenvalue route") {
  CHECK(exact_crossings_with_line(7).empty());
  for (unsigned N = 2; N <= 20; ++N) {
    const auto exact = exact_crossings_with_line(N);
    const auto pts = find_double_juddian(1, N);
    CAPTURE(N);
    REQUIRE(exact.size() == pts.size());
    // Crossings are listed by x ascending; higher branches cross at larger x.
    for (std::size_t j = 0; j < pts.size(); ++j) CHECK(std::abs(pts[j].x - exact[j]) <= 1e-9);
  }
}

TEST_CASE("other base branches") {
  const auto pts = find_double_juddian(2, 24, {.threads = 2});
  for (const auto& p : pts) {
    CHECK(p.residual_m <= 1e-9);
    CHECK(p.residual_N <= 1e-9);
  }
  CHECK(verify_distinctness(pts));
}

TEST_CASE("K certificates vanish at found points") {
  for (unsigned N : {8u, 12u, 20u}) {
    for (const auto& p : find_double_juddian(1, N)) {
      CHECK(std::abs(juddian_residual(1, p.g, p.delta)) < 1e-6);
      CHECK(std::abs(juddian_residual(N, p.g, p.delta)) < 1e-6);
    }
  }
  for (unsigned N = 8; N <= 30; ++N) {
    for (const auto& p : find_double_juddian(1, N)) {
      CHECK(juddian_certificate(1, p.g, p.delta) < 1e-6);
      CHECK(juddian_certificate(N, p.g, p.delta) < 1e-6);
    }
  }
}

TEST_CASE("helpers") {
  const auto [g, d] = to_physical(4.0, 9.0);
  CHECK(g == 1.0);
  CHECK(d == 3.0);
  CHECK_THROWS_AS(to_physical(-1.0, 1.0), std::invalid_argument);
  CHECK(normalized_residual(kus_polynomial(1), 0.5, 0.5) == 0.0);
  CHECK(normalized_residual(kus_polynomial(1), 1.0, 1.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  JuddianPoint a{}, b{};
  a.g = 1.0;
  b.g = 1.0 + 1e-12;
  const std::vector<JuddianPoint> v{a, b};
  CHECK_FALSE(verify_distinctness(v));
  JuddianPoint p{};
  p.m = 1;
  p.N = 8;
  p.branch_index = 2;
  p.x = 0.5;
  p.y = 0.25;
  CHECK(to_json_line(p) ==
        R"({"m":1,"N":8,"i":2,"x":0.5,"y":0.25,"g":0,"delta":0,"res_m":0,"res_N":0})");
}
