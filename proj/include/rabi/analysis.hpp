#ifndef RABI_ANALYSIS_HPP
#define RABI_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rabi {

/// Default slack on every inequality check, scaled by max(1, y).
inline constexpr double kDefaultSlack = 1e-9;
/// Default absolute bisection tolerance for spectra.
inline constexpr double kDefaultEigenTol = 1e-13;

/// Zeros alpha_1(y) < ... < alpha_N(y) of x -> P_N(x, y), i.e. the spectrum
/// of A_N(y).
std::vector<double> alpha_zeros(std::size_t N, double y, double tol = kDefaultEigenTol);

/// Outcome of a bound check. Margins are signed distances to the bound
/// (positive = satisfied), one per checked index.
struct BoundCheck {
  bool ok = true;
  std::optional<std::size_t> violating_index;  // 1-based k
  std::vector<double> lower_margin;
  std::vector<double> upper_margin;
};

/// alpha_i(y) - alpha_i(0) in [-y, -y/N] for every i, plus strict decrease
/// alpha_i(y) < alpha_i(y/2) < alpha_i(0).
BoundCheck verify_weyl(std::size_t N, double y, double slack = kDefaultSlack);

/// lambda_{N-m,k-m} - y/(m+1) <= alpha_k(y) < lambda_{N-m,k} for
/// k = m+1 .. N-m, with lambda from the Laguerre Newton solver.
/// Throws std::invalid_argument unless 1 <= m <= N/2.
BoundCheck verify_interlacing(std::size_t N, std::size_t m, double y, double slack = kDefaultSlack);

/// Precomputed-spectrum form of verify_interlacing, for callers that check
/// several m against one spectrum.
BoundCheck verify_interlacing(const std::vector<double>& alphas, std::size_t m, double y,
                              double slack = kDefaultSlack);

struct SpectrumReport {
  std::size_t N = 0;
  double y = 0.0;
  std::vector<double> alphas;
  bool weyl_ok = false;
  bool interlace_ok = false;
  std::size_t positive_count = 0;
};

/// alphas plus the Weyl check, the interlacing check at m = ceil(N^{1/4})
/// (vacuous when N < 2), and the number of positive zeros.
SpectrumReport spectrum_report(std::size_t N, double y);

/// #{k : alpha_k(y) <= x}.
std::size_t count_alphas_at_most(std::size_t N, double y, double x);

struct DensityRecord {
  std::size_t N = 0;
  double delta = 0.0;
  double gamma = 0.0;
  std::size_t count = 0;
  double asymptotic = 0.0;  // (4/pi) Gamma sqrt(N)
  double ratio = 0.0;       // count / asymptotic
};

/// #{k : alpha_k(Delta^2) <= (2 Gamma)^2}, the number of couplings g <= Gamma
/// at which N - g^2 is Juddian (counting a zero at g = 0 when Delta is an
/// integer, matching the eigenvalue count).
DensityRecord juddian_count(std::size_t N, double delta, double gamma);

/// One record per N, computed independently and returned in input order.
std::vector<DensityRecord> density_scan(double delta, double gamma, const std::vector<std::size_t>& Ns,
                                        unsigned threads = 1);

/// CSV with header `N,delta,gamma,count,asymptotic,ratio`.
std::string density_csv(const std::vector<DensityRecord>& rows);

/// Exact agreement of the three determinant routes at random rational
/// points: eval_exact(P_n), n! det(xI - A_n(y)), det(yI + xD_n + S_n).
struct OracleReport {
  bool ok = true;
  std::size_t checked = 0;
  unsigned first_bad_n = 0;  // 0 when ok
};

/// Points have numerators in [-20, 20] and denominators in [1, 12]; y is
/// taken nonnegative. Deterministic for a given seed.
OracleReport check_oracle_triangle(unsigned n_max, unsigned points_per_n, unsigned long long seed = 20240611);

}  // namespace rabi

#endif
