#include "rabi/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rabi/errors.hpp"

namespace rabi {
namespace {

// det of the tridiagonal matrix with diagonal a and off-diagonal products p.
mpq_class tridiag_det(const std::vector<mpq_class>& a, const std::vector<mpq_class>& p) {
  mpq_class prev2 = 1;
  mpq_class prev1 = a.empty() ? mpq_class(1) : a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    mpq_class cur = a[k] * prev1 - p[k - 1] * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

double pivot_floor(const SymTridiag& T) {
  double max_b2 = 1.0;
  for (double b : T.offdiag) max_b2 = std::max(max_b2, b * b);
  return std::numeric_limits<double>::min() * max_b2;
}

std::size_t sturm_count_impl(const SymTridiag& T, double x, double pivmin) {
  const std::size_t n = T.size();
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = d;
    d = T.diag[i] - x;
    if (i > 0) d -= T.offdiag[i - 1] * T.offdiag[i - 1] / prev;
    if (d == 0.0) {
      // A singular T - xI shows up as a zero last pivot: that eigenvalue is
      // not strictly below x. Interior zeros get a tiny value with the
      // previous pivot's sign; the next pivot flips, so the count is the same
      // whichever sign is used.
      if (i + 1 == n) break;
      d = pivmin;
    } else if (std::abs(d) < pivmin && i + 1 < n) {
      d = std::copysign(pivmin, d);
    }
    if (d < 0.0) ++count;
  }
  return count;
}

double bracket_threshold(double tol, const BisectionOptions& opts, double lo, double hi) {
  return std::max(tol, opts.rel_tol * std::max({1.0, std::abs(lo), std::abs(hi)}));
}

void check_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
}

}  // namespace

SymTridiag build_A(std::size_t N, double y) {
  if (N == 0) throw std::invalid_argument("build_A: N must be >= 1");
  if (!(y >= 0.0)) throw std::invalid_argument("build_A: y must be >= 0");
  SymTridiag T;
  T.diag.resize(N);
  T.offdiag.resize(N - 1);
  for (std::size_t i = 0; i < N; ++i) {
    T.diag[i] = static_cast<double>(2 * (N - i - 1) + 1) - y / static_cast<double>(i + 1);
  }
  for (std::size_t i = 0; i + 1 < N; ++i) T.offdiag[i] = static_cast<double>(N - i - 1);
  return T;
}

SymTridiag build_M(std::size_t N) { return build_A(N, 0.0); }

RationalTridiag build_A_exact(std::size_t N, const mpq_class& y) {
  if (N == 0) throw std::invalid_argument("build_A_exact: N must be >= 1");
  if (y < 0) throw std::invalid_argument("build_A_exact: y must be >= 0");
  RationalTridiag T;
  T.diag.reserve(N);
  for (std::size_t i = 1; i <= N; ++i) {
    T.diag.emplace_back(mpq_class(static_cast<unsigned long>(2 * (N - i) + 1)) -
                        y / static_cast<unsigned long>(i));
  }
  for (std::size_t i = 1; i < N; ++i) {
    const mpz_class b = static_cast<unsigned long>(N - i);
    T.offdiag_products.emplace_back(b * b);
  }
  return T;
}

std::size_t sturm_count(const SymTridiag& T, double x) {
  if (std::isnan(x)) throw std::invalid_argument("sturm_count: NaN threshold");
  return sturm_count_impl(T, x, pivot_floor(T));
}

std::size_t count_at_most(const SymTridiag& T, double x) {
  return sturm_count(T, std::nextafter(x, std::numeric_limits<double>::infinity()));
}

std::pair<double, double> gershgorin_bounds(const SymTridiag& T) {
  if (T.size() == 0) return {0.0, 0.0};
  const auto [dmin, dmax] = std::minmax_element(T.diag.begin(), T.diag.end());
  double bmax = 0.0;
  for (double b : T.offdiag) bmax = std::max(bmax, std::abs(b));
  return {*dmin - 2.0 * bmax, *dmax + 2.0 * bmax};
}

std::vector<double> eigenvalues_in(const SymTridiag& T, double lo, double hi, double tol,
                                   const BisectionOptions& opts) {
  if (!(lo < hi)) throw std::invalid_argument("eigenvalues_in: need lo < hi");
  check_tolerance(tol);
  if (T.size() == 1) {
    if (T.diag[0] >= lo && T.diag[0] < hi) return {T.diag[0]};
    return {};
  }
  const double pivmin = pivot_floor(T);

  struct Item {
    double lo, hi;
    std::size_t clo, chi;
    int iter;
  };
  std::vector<double> out;
  std::vector<Item> stack{{lo, hi, sturm_count_impl(T, lo, pivmin), sturm_count_impl(T, hi, pivmin), 0}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const std::size_t k = it.chi - it.clo;
    if (k == 0) continue;
    const double mid = it.lo + 0.5 * (it.hi - it.lo);
    const bool exhausted = !(it.lo < mid && mid < it.hi);
    if (k == 1) {
      if (exhausted || it.hi - it.lo <= bracket_threshold(tol, opts, it.lo, it.hi)) {
        out.push_back(mid);
        continue;
      }
      if (it.iter >= opts.max_iter) throw ConvergenceError("bisection budget exhausted", it.clo);
    } else if (exhausted) {
      throw ConvergenceError("eigenvalues not separable at float64 resolution", it.clo);
    }
    const std::size_t cm = sturm_count_impl(T, mid, pivmin);
    const int next_iter = k == 1 ? it.iter + 1 : 0;
    stack.push_back({mid, it.hi, cm, it.chi, next_iter});
    stack.push_back({it.lo, mid, it.clo, cm, next_iter});
  }
  return out;
}

std::vector<double> all_eigenvalues(const SymTridiag& T, double tol, const BisectionOptions& opts) {
  auto [lo, hi] = gershgorin_bounds(T);
  // Pad so that no eigenvalue sits on either end of the half-open range.
  const double pad = 1e-8 * std::max({1.0, std::abs(lo), std::abs(hi)});
  return eigenvalues_in(T, lo - pad, hi + pad, tol, opts);
}

double kth_eigenvalue(const SymTridiag& T, std::size_t k, double tol, const BisectionOptions& opts) {
  if (k >= T.size()) throw std::out_of_range("kth_eigenvalue: index out of range");
  check_tolerance(tol);
  if (T.size() == 1) return T.diag[0];
  const double pivmin = pivot_floor(T);
  auto [lo, hi] = gershgorin_bounds(T);
  const double pad = 1e-8 * std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= pad;
  hi += pad;
  // Invariant: count(lo) <= k < count(hi).
  std::size_t clo = 0;
  std::size_t chi = T.size();
  int iter = 0;
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(lo < mid && mid < hi) || (chi - clo == 1 && hi - lo <= bracket_threshold(tol, opts, lo, hi)))
      return mid;
    if (chi - clo == 1 && iter++ >= opts.max_iter) throw ConvergenceError("bisection budget exhausted", k);
    const std::size_t cm = sturm_count_impl(T, mid, pivmin);
    if (cm <= k) {
      lo = mid;
      clo = cm;
    } else {
      hi = mid;
      chi = cm;
    }
  }
}

std::vector<std::pair<double, double>> isolate_eigenvalues(const SymTridiag& T, double width) {
  check_tolerance(width);
  const double pivmin = pivot_floor(T);
  auto [lo, hi] = gershgorin_bounds(T);
  const double pad = 1e-8 * std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= pad;
  hi += pad;

  struct Item {
    double lo, hi;
    std::size_t clo, chi;
  };
  std::vector<std::pair<double, double>> out;
  out.reserve(T.size());
  std::vector<Item> stack{{lo, hi, sturm_count_impl(T, lo, pivmin), sturm_count_impl(T, hi, pivmin)}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const std::size_t k = it.chi - it.clo;
    if (k == 0) continue;
    const double mid = it.lo + 0.5 * (it.hi - it.lo);
    const bool exhausted = !(it.lo < mid && mid < it.hi);
    if (k == 1 && (exhausted || it.hi - it.lo <= width)) {
      out.emplace_back(it.lo, it.hi);
      continue;
    }
    if (exhausted) throw ConvergenceError("eigenvalues not separable at float64 resolution", it.clo);
    const std::size_t cm = sturm_count_impl(T, mid, pivmin);
    stack.push_back({mid, it.hi, cm, it.chi});
    stack.push_back({it.lo, mid, it.clo, cm});
  }
  return out;
}

mpq_class charpoly_eval(const RationalTridiag& T, const mpq_class& x) {
  std::vector<mpq_class> shifted;
  shifted.reserve(T.size());
  for (const auto& a : T.diag) shifted.emplace_back(x - a);
  return tridiag_det(shifted, T.offdiag_products);
}

double charpoly_eval(const SymTridiag& T, double x) {
  double prev2 = 1.0;
  double prev1 = T.size() == 0 ? 1.0 : x - T.diag[0];
  for (std::size_t k = 1; k < T.size(); ++k) {
    const double b = T.offdiag[k - 1];
    const double cur = (x - T.diag[k]) * prev1 - b * b * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

mpq_class det_oracle_S(std::size_t N, const mpq_class& x, const mpq_class& y) {
  if (N == 0) throw std::invalid_argument("det_oracle_S: N must be >= 1");
  std::vector<mpq_class> diag;
  std::vector<mpq_class> prods;
  diag.reserve(N);
  for (std::size_t i = 1; i <= N; ++i) {
    const mpz_class ii = static_cast<unsigned long>(i);
    const mpz_class s_ii = -ii * static_cast<unsigned long>(2 * (N - i) + 1);
    diag.emplace_back(y + x * ii + s_ii);
  }
  for (std::size_t i = 1; i < N; ++i) {
    const mpz_class ii = static_cast<unsigned long>(i);
    const mpz_class ni = static_cast<unsigned long>(N - i);
    prods.emplace_back(ni * ni * ii * (ii + 1));
  }
  return tridiag_det(diag, prods);
}

}  // namespace rabi
