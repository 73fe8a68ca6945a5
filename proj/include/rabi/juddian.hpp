#ifndef RABI_JUDDIAN_HPP
#define RABI_JUDDIAN_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rabi/constraint_poly.hpp"

namespace rabi {

struct LocusPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Samples of Z_{n,m} = {(alpha_m(y), y) : 0 <= y <= m^2}.
struct Branch {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<LocusPoint> points;
};

/// alpha_m of A_n(y) on `steps` uniform samples of [0, m^2] (steps >= 2).
/// The first point sits on (lambda_{n,m}, 0), the last on (0, m^2).
Branch trace_branch(unsigned n, unsigned m, std::size_t steps, double tol = 1e-14);

/// CSV `y,x`, one row per sample.
std::string branch_csv(const Branch& b);

/// A parameter pair at which both P_m and P_N vanish, so that m - g^2 and
/// N - g^2 are both Juddian.
struct JuddianPoint {
  unsigned m = 0;
  unsigned N = 0;
  std::size_t branch_index = 0;  // i of Z_{N,i}, 1-based
  double x = 0.0;                // (2g)^2
  double y = 0.0;                // Delta^2
  double g = 0.0;
  double delta = 0.0;
  /// |P_k| / |grad P_k| at (x, y), evaluated exactly: a first-order distance
  /// from (x, y) to the zero set of P_k.
  double residual_m = 0.0;
  double residual_N = 0.0;
  /// Newton refinement was rejected and the bisection point kept.
  bool newton_fallback = false;
  /// Further sign changes on this branch above the reported crossing.
  std::size_t extra_crossings = 0;
};

struct DoubleJuddianOptions {
  /// Uniform samples of y over [0, 1] scanned for sign changes.
  std::size_t scan_samples = 256;
  /// Acceptance bound on residual_m and residual_N.
  double accept_tol = 1e-9;
  /// Bisection tolerance for eigenvalues feeding the scan.
  double eigen_tol = 1e-15;
  unsigned exact_cap = kDefaultExactCap;
  unsigned threads = 1;
};

/// A crossing that the endpoint ordering guarantees was not found on the grid.
class CrossingNotBracketed : public std::runtime_error {
 public:
  CrossingNotBracketed(unsigned N, std::size_t branch)
      : std::runtime_error("crossing not bracketed on branch " + std::to_string(branch) + " of Z_" +
                           std::to_string(N)),
        branch_(branch) {}
  std::size_t branch() const noexcept { return branch_; }

 private:
  std::size_t branch_;
};

/// For every branch Z_{N,i}, i >= 2, with lambda_{N,i} < lambda_{m,1}: the
/// lowest crossing with Z_{m,1}, bracketed on the y-grid, bisected, then
/// refined by 2D Newton on (P_m, P_N). Sorted by branch index. Throws
/// std::invalid_argument unless N > m >= 1, CrossingNotBracketed when no sign
/// change is seen, std::runtime_error when a point fails accept_tol.
std::vector<JuddianPoint> find_double_juddian(unsigned m, unsigned N, const DoubleJuddianOptions& opts = {});

/// Zeros of P_N(x, 1 - x) on (0, 1), by exact Sturm isolation and
/// bisection to the given width. These are the crossings of Z_N with Z_1.
std::vector<double> exact_crossings_with_line(unsigned N, double width = 1e-15,
                                              unsigned cap = kDefaultExactCap);

/// True iff all (g, Delta) pairs are pairwise farther apart than tol.
bool verify_distinctness(std::span<const JuddianPoint> points, double tol = 1e-9);

/// (g, Delta) = (sqrt(x)/2, sqrt(y)). Throws std::invalid_argument on
/// negative input.
std::pair<double, double> to_physical(double x, double y);

/// |P(x, y)| / |grad P(x, y)| computed in exact arithmetic at the doubles.
double normalized_residual(const BivariatePoly& p, double x, double y);

/// One JSON object per line:
/// {"m":..,"N":..,"i":..,"x":..,"y":..,"g":..,"delta":..,"res_m":..,"res_N":..}
std::string to_json_line(const JuddianPoint& p);

}  // namespace rabi

#endif
