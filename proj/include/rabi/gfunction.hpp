#ifndef RABI_GFUNCTION_HPP
#define RABI_GFUNCTION_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rabi {

/// z came within the pole guard of an integer where a coefficient blows up.
class PoleGuardError : public std::domain_error {
 public:
  PoleGuardError(double z, int pole)
      : std::domain_error("z = " + std::to_string(z) + " is within the pole guard of " +
                          std::to_string(pole)),
        pole_(pole) {}
  int pole() const noexcept { return pole_; }

 private:
  int pole_;
};

inline constexpr double kDefaultPoleGuard = 1e-3;

/// f_m(z) = 2g + (Delta^2 / (z - m) + m - z) / (2g).
double f_coefficient(int m, double z, double g, double delta);

/// K_0 .. K_{n_max} at fixed (z, g, Delta).
struct KSequence {
  double z = 0.0;
  double g = 0.0;
  double delta = 0.0;
  std::vector<double> values;
};

/// K_0 = 1, K_1 = f_0(z), n K_n = f_{n-1}(z) K_{n-1} - K_{n-2}.
/// Throws PoleGuardError if |z - m| <= pole_guard for some m in [0, n_max-1],
/// unless allow_pole_adjacent is set. Throws std::invalid_argument for g <= 0.
KSequence k_sequence(double z, double g, double delta, unsigned n_max,
                     double pole_guard = kDefaultPoleGuard, bool allow_pole_adjacent = false);

/// max over n >= 2 of |n K_n - f_{n-1} K_{n-1} + K_{n-2}| relative to the
/// magnitude of the terms involved.
double recursion_residual(const KSequence& seq);

/// K_n(n; g, Delta). Vanishes exactly when n - g^2 is a Juddian eigenvalue;
/// (n!)^2 (2g)^n K_n(n) = P_n((2g)^2, Delta^2).
double juddian_residual(unsigned n, double g, double delta);

/// |K_n(n)| / |grad K_n(n)| over (g, Delta), gradient by central differences:
/// a first-order distance from (g, Delta) to the curve K_n(n) = 0. Unlike
/// K_n(n) itself it does not grow like (2g)^-n / (n!)^2.
double juddian_certificate(unsigned n, double g, double delta);

struct GSeriesOptions {
  double rel_tol = 1e-14;
  unsigned n_cap = 200;
  unsigned tail_window = 4;
  double pole_guard = kDefaultPoleGuard;
  /// Kahan-compensated partial sums.
  bool compensated = false;
};

struct GSample {
  double z = 0.0;
  double g_plus = 0.0;
  double g_minus = 0.0;
  unsigned truncation_n = 0;
  bool converged = false;
};

/// G_+-(z) = sum_n K_n(z) g^n (1 -+ Delta / (z - n)), truncated once
/// tail_window consecutive terms each move both sums by less than rel_tol
/// relatively, or at n_cap with converged = false. Throws PoleGuardError
/// near nonnegative integers.
GSample g_pm(double z, double g, double delta, const GSeriesOptions& opts = {});

/// Samples on a uniform grid over [z_lo, z_hi] (the midpoint when samples is
/// 1), skipping grid points inside a pole-guard neighbourhood.
std::vector<GSample> g_scan(double z_lo, double z_hi, unsigned samples, double g, double delta,
                            const GSeriesOptions& opts = {}, unsigned threads = 1);

/// CSV with header `z,g_plus,g_minus,converged,truncation_n`.
std::string g_samples_csv(const std::vector<GSample>& samples);

}  // namespace rabi

#endif
