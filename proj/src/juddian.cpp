#include "rabi/juddian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rabi/format.hpp"
#include "rabi/parallel.hpp"
#include "rabi/real_roots.hpp"
#include "rabi/tridiag.hpp"

namespace rabi {
namespace {

// Full float64 resolution: no relative floor on the bracket width.
constexpr BisectionOptions kFullResolution{64, 0.0};

double alpha_k(unsigned n, std::size_t k, double y, double tol) {
  return kth_eigenvalue(build_A(n, y), k, tol, kFullResolution);
}

// P_k(x, y) / k! evaluated in floating point through the A_k(y) route.
double q_value(unsigned k, double x, double y) { return charpoly_eval(build_A(k, y), x); }

struct Refined {
  double x, y;
  bool ok;
};

// Newton on (Q_m, Q_N) with a central-difference Jacobian.
Refined newton_refine(unsigned m, unsigned N, double x, double y) {
  for (int it = 0; it < 12; ++it) {
    const double hx = 1e-6 * std::max(1.0, std::abs(x));
    const double hy = std::min(1e-6 * std::max(1.0, std::abs(y)), 0.5 * y);
    if (!(hy > 0.0)) return {x, y, false};
    const std::array<unsigned, 2> ks{m, N};
    std::array<double, 2> F{};
    std::array<std::array<double, 2>, 2> J{};
    for (int r = 0; r < 2; ++r) {
      F[r] = q_value(ks[r], x, y);
      J[r][0] = (q_value(ks[r], x + hx, y) - q_value(ks[r], x - hx, y)) / (2.0 * hx);
      J[r][1] = (q_value(ks[r], x, y + hy) - q_value(ks[r], x, y - hy)) / (2.0 * hy);
    }
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (!std::isfinite(det) || det == 0.0) return {x, y, false};
    const double dx = (F[0] * J[1][1] - F[1] * J[0][1]) / det;
    const double dy = (J[0][0] * F[1] - J[1][0] * F[0]) / det;
    x -= dx;
    y -= dy;
    if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || y < 0.0) return {x, y, false};
    if (std::abs(dx) <= 1e-16 * std::max(1.0, x) && std::abs(dy) <= 1e-16 * std::max(1.0, y)) break;
  }
  return {x, y, true};
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

Branch trace_branch(unsigned n, unsigned m, std::size_t steps, double tol) {
  if (m < 1 || m > n) throw std::invalid_argument("trace_branch: need 1 <= m <= n");
  if (steps < 2) throw std::invalid_argument("trace_branch: need at least two steps");
  Branch b{n, m, {}};
  b.points.reserve(steps);
  const double top = static_cast<double>(m) * m;
  for (std::size_t j = 0; j < steps; ++j) {
    const double y = j + 1 == steps ? top : top * static_cast<double>(j) / static_cast<double>(steps - 1);
    b.points.push_back({alpha_k(n, m - 1, y, tol), y});
  }
  return b;
}

std::string branch_csv(const Branch& b) {
  std::ostringstream os;
  os << "y,x\n";
  for (const auto& p : b.points) os << format_double(p.y) << ',' << format_double(p.x) << '\n';
  return os.str();
}

double normalized_residual(const BivariatePoly& p, double x, double y) {
  const mpq_class qx(x), qy(y);
  const mpq_class v = eval_exact(p, qx, qy);
  if (v == 0) return 0.0;
  const mpq_class gx = eval_exact(p.partial_x(), qx, qy);
  const mpq_class gy = eval_exact(p.partial_y(), qx, qy);
  const mpq_class g2 = gx * gx + gy * gy;
  if (g2 == 0) return std::numeric_limits<double>::infinity();
  const mpq_class r2 = v * v / g2;
  return std::sqrt(r2.get_d());
}

std::pair<double, double> to_physical(double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0)) throw std::invalid_argument("to_physical: x and y must be >= 0");
  return {std::sqrt(x) / 2.0, std::sqrt(y)};
}

std::vector<JuddianPoint> find_double_juddian(unsigned m, unsigned N, const DoubleJuddianOptions& opts) {
  if (m < 1 || N <= m) throw std::invalid_argument("find_double_juddian: need N > m >= 1");
  if (opts.scan_samples < 2) throw std::invalid_argument("find_double_juddian: need >= 2 scan samples");

  const double tol = opts.eigen_tol;
  const double lambda_m1 = kth_eigenvalue(build_M(m), 0, tol, kFullResolution);
  const auto lambda_N = all_eigenvalues(build_M(N), tol);
  std::vector<std::size_t> branches;  // 1-based i
  for (std::size_t i = 2; i <= N; ++i)
    if (lambda_N[i - 1] < lambda_m1) branches.push_back(i);
  if (branches.empty()) return {};

  const BivariatePoly P_m = kus_polynomial(m, opts.exact_cap);
  const BivariatePoly P_N = kus_polynomial(N, opts.exact_cap);

  // Z_{m,1} runs over y in [0, 1].
  const std::size_t S = opts.scan_samples;
  std::vector<double> ys(S + 1), base(S + 1);
  for (std::size_t j = 0; j <= S; ++j) {
    ys[j] = static_cast<double>(j) / static_cast<double>(S);
    base[j] = alpha_k(m, 0, ys[j], tol);
  }

  std::vector<JuddianPoint> out(branches.size());
  parallel_for(branches.size(), opts.threads, [&](std::size_t bi) {
    const std::size_t i = branches[bi];
    auto f = [&](double y) { return alpha_k(N, i - 1, y, tol) - alpha_k(m, 0, y, tol); };

    std::vector<std::size_t> changes;
    int prev = sign_of(alpha_k(N, i - 1, ys[0], tol) - base[0]);
    for (std::size_t j = 1; j <= S; ++j) {
      const int cur = sign_of(alpha_k(N, i - 1, ys[j], tol) - base[j]);
      if (cur != prev && cur != 0) changes.push_back(j - 1);
      if (cur != 0) prev = cur;
    }
    if (changes.empty()) throw CrossingNotBracketed(N, i);

    double lo = ys[changes.front()];
    double hi = ys[changes.front() + 1];
    int s_lo = sign_of(f(lo));
    for (int it = 0; it < 200; ++it) {
      const double mid = lo + 0.5 * (hi - lo);
      if (!(lo < mid && mid < hi)) break;
      const int s_mid = sign_of(f(mid));
      if (s_mid == 0) {
        lo = hi = mid;
        break;
      }
      if (s_mid == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double y_bis = lo + 0.5 * (hi - lo);
    const double x_bis = alpha_k(m, 0, y_bis, tol);

    JuddianPoint p;
    p.m = m;
    p.N = N;
    p.branch_index = i;
    p.extra_crossings = changes.size() - 1;
    const double res_bis = std::max(normalized_residual(P_m, x_bis, y_bis), normalized_residual(P_N, x_bis, y_bis));

    const Refined r = newton_refine(m, N, x_bis, y_bis);
    double res_newton = std::numeric_limits<double>::infinity();
    if (r.ok) res_newton = std::max(normalized_residual(P_m, r.x, r.y), normalized_residual(P_N, r.x, r.y));
    if (r.ok && res_newton <= res_bis) {
      p.x = r.x;
      p.y = r.y;
    } else {
      p.x = x_bis;
      p.y = y_bis;
      p.newton_fallback = true;
    }
    p.residual_m = normalized_residual(P_m, p.x, p.y);
    p.residual_N = normalized_residual(P_N, p.x, p.y);
    std::tie(p.g, p.delta) = to_physical(p.x, p.y);
    if (!(p.residual_m <= opts.accept_tol && p.residual_N <= opts.accept_tol)) {
      throw std::runtime_error("double-Juddian point on branch " + std::to_string(i) +
                               " failed the residual bound");
    }
    out[bi] = p;
  });
  return out;
}

std::vector<double> exact_crossings_with_line(unsigned N, double width, unsigned cap) {
  const auto line = restrict_to_line(kus_polynomial(N, cap), mpq_class(1), mpq_class(-1));
  std::vector<double> xs;
  for (const auto& r : isolate_real_roots(line, mpq_class(0), mpq_class(1), mpq_class(width))) {
    const mpq_class mid = (r.lo + r.hi) / 2;
    xs.push_back(mid.get_d());
  }
  return xs;
}

bool verify_distinctness(std::span<const JuddianPoint> points, double tol) {
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (std::hypot(points[a].g - points[b].g, points[a].delta - points[b].delta) <= tol) return false;
  return true;
}

std::string to_json_line(const JuddianPoint& p) {
  std::ostringstream os;
  os << "{\"m\":" << p.m << ",\"N\":" << p.N << ",\"i\":" << p.branch_index << ",\"x\":" << format_double(p.x)
     << ",\"y\":" << format_double(p.y) << ",\"g\":" << format_double(p.g)
     << ",\"delta\":" << format_double(p.delta) << ",\"res_m\":" << format_double(p.residual_m)
     << ",\"res_N\":" << format_double(p.residual_N) << "}";
  return os.str();
}

}  // namespace rabi
