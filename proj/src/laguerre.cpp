#include "rabi/laguerre.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rabi/errors.hpp"
#include "rabi/tridiag.hpp"

namespace rabi {
namespace {

constexpr double kNoiseFloor = 1e-10;

// L_N and L_{N-1} scaled by a common power of two, so that Newton steps,
// which only need their ratio, survive magnitudes far outside double range.
struct ScaledPair {
  double cur = 1.0;   // L_N * 2^-exp2
  double prev = 0.0;  // L_{N-1} * 2^-exp2
  int exp2 = 0;
};

ScaledPair laguerre_pair(unsigned N, double x) {
  ScaledPair s;
  if (N == 0) return s;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (unsigned k = 1; k < N; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 0x1p400) {
      cur = std::ldexp(cur, -400);
      prev = std::ldexp(prev, -400);
      s.exp2 += 400;
    }
  }
  s.cur = cur;
  s.prev = prev;
  return s;
}

}  // namespace

double laguerre_eval(unsigned N, double x) {
  const ScaledPair s = laguerre_pair(N, x);
  return std::ldexp(s.cur, s.exp2);
}

std::vector<mpq_class> laguerre_coefficients(unsigned N) {
  std::vector<mpq_class> c;
  c.reserve(N + 1);
  mpz_class binom = 1;
  mpz_class fact = 1;
  for (unsigned m = 0; m <= N; ++m) {
    if (m > 0) {
      binom = binom * (N - m + 1) / m;
      fact *= m;
    }
    mpq_class v(binom, fact);
    v.canonicalize();
    c.push_back(m % 2 ? mpq_class(-v) : v);
  }
  return c;
}

LaguerreZeros zeros_newton(unsigned N, double tol, const LaguerreNewtonOptions& opts) {
  if (N == 0) throw std::invalid_argument("zeros_newton: N must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("zeros_newton: tol must be positive");

  LaguerreZeros out{N, {}};
  out.zeros.reserve(N);
  const auto M = build_M(N);
  // Brackets narrow enough that Newton starts in the basin of its own zero;
  // the final digits come from the recurrence alone.
  const auto brackets = isolate_eigenvalues(M, opts.seed_rel_width);
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    auto [lo, hi] = brackets[k];
    const double slack = opts.seed_rel_width * std::max(1.0, std::abs(hi));
    lo = std::max(0.0, lo - slack);
    hi += slack;
    double x = 0.5 * (lo + hi);
    bool converged = false;
    double prev_step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opts.max_iter; ++it) {
      const ScaledPair s = laguerre_pair(N, x);
      // L_N'(x) = N (L_N - L_{N-1}) / x.
      const double denom = N * (s.cur - s.prev);
      if (denom == 0.0) break;
      const double step = x * s.cur / denom;
      x -= step;
      if (!(x > lo && x < hi)) throw ConvergenceError("Newton left the seed bracket", k);
      const double scale = std::max(1.0, x);
      // Past the recurrence's noise floor the steps stop shrinking.
      if (std::abs(step) <= tol * scale ||
          (std::abs(step) >= 0.5 * prev_step && std::abs(step) <= kNoiseFloor * scale)) {
        converged = true;
        break;
      }
      prev_step = std::abs(step);
    }
    if (!converged) throw ConvergenceError("Newton did not converge", k);
    out.zeros.push_back(x);
  }
  if (out.zeros.size() != N) throw ConvergenceError("zero count mismatch", out.zeros.size());
  return out;
}

std::size_t count_below(std::size_t N, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("count_below: x must be positive");
  return count_at_most(build_M(N), x);
}

double zero_density_limit(double x) { return 2.0 / std::numbers::pi * std::sqrt(x); }

}  // namespace rabi
