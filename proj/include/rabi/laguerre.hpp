#ifndef RABI_LAGUERRE_HPP
#define RABI_LAGUERRE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace rabi {

/// Zeros of L_N in ascending order.
struct LaguerreZeros {
  unsigned N = 0;
  std::vector<double> zeros;
};

/// L_N(x) by (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}. Returns +-inf when the
/// value leaves the double range (large N and x).
double laguerre_eval(unsigned N, double x);

/// Exact coefficients (-1)^m C(N, m) / m!, index m.
std::vector<mpq_class> laguerre_coefficients(unsigned N);

struct LaguerreNewtonOptions {
  int max_iter = 60;
  /// Absolute width the eigenvalue seeds are bisected to before Newton
  /// takes over.
  double seed_rel_width = 1e-6;
};

/// All N zeros. Each zero is seeded from a coarse Sturm bracket of M_N and
/// polished by Newton on the three-term recurrence until the step
/// |L_N / L_N'| is below tol * max(1, x), or stalls below 1e-10 * max(1, x)
/// where rounding in the recurrence dominates. Throws ConvergenceError naming the
/// zero when Newton stalls or leaves its bracket.
LaguerreZeros zeros_newton(unsigned N, double tol, const LaguerreNewtonOptions& opts = {});

/// #{k : lambda_{N,k} <= x}, counted on M_N.
std::size_t count_below(std::size_t N, double x);

/// (2/pi) sqrt(x): the limit of count_below(N, x) / sqrt(N).
double zero_density_limit(double x);

}  // namespace rabi

#endif
