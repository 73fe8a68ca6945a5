#ifndef RABI_TRIDIAG_HPP
#define RABI_TRIDIAG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace rabi {

/// Real symmetric tridiagonal matrix. offdiag[i] couples rows i and i+1.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const noexcept { return diag.size(); }
};

/// Tridiagonal matrix over Q, held only through what the determinant
/// recursion needs: the diagonal and the products b_i * c_i of the paired
/// off-diagonal entries.
struct RationalTridiag {
  std::vector<mpq_class> diag;
  std::vector<mpq_class> offdiag_products;

  std::size_t size() const noexcept { return diag.size(); }
};

/// A_N(y) = M_N - y D_N^{-1}, with M_N = tridiag(2(N-i)+1 ; N-i) (1-based)
/// and D_N = diag(1..N). Its characteristic polynomial is P_N(x, y) / N!.
/// Throws std::invalid_argument for N = 0 or y < 0 (or NaN).
SymTridiag build_A(std::size_t N, double y);
/// build_A(N, 0).
SymTridiag build_M(std::size_t N);
/// A_N(y) over Q.
RationalTridiag build_A_exact(std::size_t N, const mpq_class& y);

/// Number of eigenvalues of T strictly below x, from the signs of the
/// LDL^T pivots of T - xI. Throws std::invalid_argument for NaN x.
std::size_t sturm_count(const SymTridiag& T, double x);

/// Number of eigenvalues <= x. The threshold is nudged one ulp upward.
std::size_t count_at_most(const SymTridiag& T, double x);

/// [min(diag) - 2 max|offdiag|, max(diag) + 2 max|offdiag|].
std::pair<double, double> gershgorin_bounds(const SymTridiag& T);

struct BisectionOptions {
  /// Halvings allowed per eigenvalue once it is isolated.
  int max_iter = 64;
  /// Width floor relative to max(1, |x|); bisection stops at whichever of
  /// this and the caller's absolute tolerance is larger.
  double rel_tol = 1e-13;
};

/// Eigenvalues in [lo, hi), i.e. sturm_count(hi) - sturm_count(lo) of them,
/// each the midpoint of a bracket of width <= max(tol, rel_tol * max(1,|x|))
/// or of a bracket that float64 can no longer split. Ascending.
/// Throws ConvergenceError when a bracket fails to shrink within max_iter or
/// when two eigenvalues cannot be separated at float64 resolution.
std::vector<double> eigenvalues_in(const SymTridiag& T, double lo, double hi, double tol,
                                   const BisectionOptions& opts = {});

/// All eigenvalues, ascending.
std::vector<double> all_eigenvalues(const SymTridiag& T, double tol,
                                    const BisectionOptions& opts = {});

/// The k-th smallest eigenvalue, k in [0, N).
double kth_eigenvalue(const SymTridiag& T, std::size_t k, double tol,
                      const BisectionOptions& opts = {});

/// Disjoint brackets [lo, hi) each holding exactly one eigenvalue, shrunk to
/// width <= width. Used to seed independent polishing.
std::vector<std::pair<double, double>> isolate_eigenvalues(const SymTridiag& T, double width);

/// det(xI - T) for rational T by the three-term recursion
///   D_k = (x - a_k) D_{k-1} - (b_{k-1} c_{k-1}) D_{k-2}.
mpq_class charpoly_eval(const RationalTridiag& T, const mpq_class& x);
/// Floating-point version of the same recursion.
double charpoly_eval(const SymTridiag& T, double x);

/// det(y I + x D_N + S_N), where S_N has diagonal -i(2(N-i)+1) and squared
/// off-diagonal (N-i)^2 i(i+1). Equals P_N(x, y) exactly.
mpq_class det_oracle_S(std::size_t N, const mpq_class& x, const mpq_class& y);

}  // namespace rabi

#endif
