// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rabi/analysis.hpp"
#include "rabi/constraint_poly.hpp"
#include "rabi/gfunction.hpp"
#include "rabi/juddian.hpp"
#include "rabi/laguerre.hpp"
#include "rabi/tridiag.hpp"

using namespace rabi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome axis_restrictions() {
  for (unsigned n = 1; n <= 25; ++n) {
    if (restrict_to_y_axis(n).coeffs != oracle::product_of_squares(n)) return {false, "y axis, n=" + std::to_string(n)};
    const auto u = restrict_to_x_axis(n);
    const mpz_class f = oracle::factorial(n);
    const mpq_class scale = (n % 2 ? -1 : 1) * f * f;
    for (unsigned m = 0; m <= n; ++m)
      if (u.coeffs.size() != n + 1 || u.coeffs[m] != scale * oracle::laguerre_coefficient(n, m))
        return {false, "x axis, n=" + std::to_string(n)};
  }
  return {true, "n=1..25 coefficient-exact"};
}

Outcome oracle_triangle() {
  const auto r = check_oracle_triangle(12, 20);
  return {r.ok && r.checked == 240, std::to_string(r.checked) + " points"};
}

Outcome laguerre_20() {
  const auto z = zeros_newton(20, 1e-15).zeros;
  const std::vector<std::pair<std::size_t, std::string>> want{
      {0, "0.0705399"}, {1, "0.372127"}, {2, "0.916582"}, {19, "66.5244"}};
  std::string got;
  bool ok = true;
  for (const auto& [k, s] : want) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", z[k]);
    ok = ok && s == buf;
    got += std::string(got.empty() ? "" : " ") + buf;
  }
  return {ok, got};
}

Outcome weyl_grid() {
  for (std::size_t N : {10u, 50u, 200u, 1000u})
    for (double y : {0.1, 0.5, 2.0, 10.0})
      if (!verify_weyl(N, y, 1e-9).ok) return {false, "N=" + std::to_string(N) + " y=" + std::to_string(y)};
  return {true, "16 (N,y) pairs"};
}

Outcome interlacing() {
  std::vector<std::size_t> Ns;
  for (std::size_t N = 2; N <= 150; ++N) Ns.push_back(N);
  for (std::size_t N : {200u, 300u, 500u, 750u, 1000u, 1500u, 2000u}) Ns.push_back(N);
  std::size_t checks = 0;
  for (std::size_t N : Ns) {
    const auto mq = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(N), 0.25) - 1e-12));
    const auto mc = static_cast<std::size_t>(std::ceil(std::cbrt(static_cast<double>(N)) - 1e-12));
    for (double y : {0.5, 2.0}) {
      const auto alphas = alpha_zeros(N, y);
      for (std::size_t m : {std::size_t{1}, mq, mc}) {
        if (m > N / 2) continue;
        ++checks;
        if (!verify_interlacing(alphas, m, y).ok)
          return {false, "N=" + std::to_string(N) + " m=" + std::to_string(m) + " y=" + std::to_string(y)};
      }
    }
  }
  return {true, std::to_string(checks) + " (N,m,y) triples, N up to 2000"};
}

Outcome density() {
  std::string detail;
  bool ok = true;
  for (double delta : {0.5, 1.0}) {
    for (const auto& [N, tol] : std::vector<std::pair<std::size_t, double>>{{10000, 0.05}, {1000000, 0.02}}) {
      const auto r = juddian_count(N, delta, 1.0);
      ok = ok && std::abs(r.ratio - 1.0) <= tol;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%sdelta=%g N=%zu ratio=%.5f", detail.empty() ? "" : "; ", delta, N, r.ratio);
      detail += buf;
    }
  }
  return {ok, detail};
}

Outcome double_juddian() {
  std::size_t total = 0;
  double worst_p = 0.0, worst_k = 0.0, worst_raw = 0.0;
  for (unsigned N = 2; N <= 30; ++N) {
    const auto pts = find_double_juddian(1, N);
    if (pts.empty() != (N < 8)) return {false, "N=" + std::to_string(N) + " count " + std::to_string(pts.size())};
    for (const auto& p : pts) {
      worst_p = std::max({worst_p, p.residual_m, p.residual_N});
      worst_k = std::max({worst_k, juddian_certificate(1, p.g, p.delta), juddian_certificate(N, p.g, p.delta)});
      worst_raw = std::max({worst_raw, std::abs(juddian_residual(1, p.g, p.delta)),
                            std::abs(juddian_residual(N, p.g, p.delta))});
    }
    total += pts.size();
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu points, max |P|/|grad P| %.2e, max |K|/|grad K| %.2e (raw |K| up to %.2e)",
                total, worst_p, worst_k, worst_raw);
  return {worst_p < 1e-9 && worst_k < 1e-6, buf};
}

Outcome cross_route() {
  double worst = 0.0;
  for (unsigned N = 2; N <= 20; ++N) {
    const auto exact = exact_crossings_with_line(N);
    const auto pts = find_double_juddian(1, N);
    if (exact.size() != pts.size()) return {false, "N=" + std::to_string(N) + " count mismatch"};
    for (std::size_t j = 0; j < pts.size(); ++j) worst = std::max(worst, std::abs(pts[j].x - exact[j]));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |dx| %.2e", worst);
  return {worst <= 1e-9, buf};
}

Outcome positive_zero_count() {
  for (double y : {0.25, 0.5, 2.0, 5.0, 17.0, 99.0}) {
    const auto floor_sqrt = static_cast<std::size_t>(std::floor(std::sqrt(y)));
    for (std::size_t N = 1; N <= 100; ++N) {
      const std::size_t expected = N > floor_sqrt ? N - floor_sqrt : 0;
      if (N - count_alphas_at_most(N, y, 0.0) != expected)
        return {false, "N=" + std::to_string(N) + " y=" + std::to_string(y)};
    }
  }
  return {true, "600 (N,y) pairs"};
}

Outcome bridge() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::vector<BivariatePoly> polys;
  for (unsigned n = 1; n <= 15; ++n) polys.push_back(kus_polynomial(n));
  double worst = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const double g = 2.0 - u(rng);
    const double d = 2.0 - u(rng);
    for (unsigned n = 1; n <= 15; ++n) {
      const mpz_class f = oracle::factorial(n);
      const double lhs = mpz_class(f * f).get_d() * std::pow(2.0 * g, n) * juddian_residual(n, g, d);
      const double rhs = eval_exact(polys[n - 1], mpq_class(4.0 * g * g), mpq_class(d * d)).get_d();
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max relative error %.2e", worst);
  return {worst <= 1e-8, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axis restrictions are exact", axis_restrictions},
      {"three determinant routes agree", oracle_triangle},
      {"Laguerre L_20 zeros to printed digits", laguerre_20},
      {"Weyl bracket and monotone decrease", weyl_grid},
      {"interlacing with shifted Laguerre zeros", interlacing},
      {"Juddian density ratio", density},
      {"double-Juddian existence for m=1", double_juddian},
      {"eigenvalue and exact crossings agree", cross_route},
      {"positive-zero count law", positive_zero_count},
      {"K-recursion bridge", bridge},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
