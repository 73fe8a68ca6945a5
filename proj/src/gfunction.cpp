#include "rabi/gfunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rabi/format.hpp"
#include "rabi/parallel.hpp"

namespace rabi {
namespace {

void check_coupling(double g) {
  if (!(g > 0.0)) throw std::invalid_argument("coupling g must be positive");
}

// Nearest nonnegative integer in [0, limit] closer than guard, or -1.
int nearby_pole(double z, unsigned limit, double guard) {
  const double r = std::round(z);
  if (r < 0.0 || r > static_cast<double>(limit)) return -1;
  return std::abs(z - r) <= guard ? static_cast<int>(r) : -1;
}

struct Accumulator {
  double sum = 0.0;
  double carry = 0.0;
  bool compensated = false;

  void add(double v) {
    if (!compensated) {
      sum += v;
      return;
    }
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double f_coefficient(int m, double z, double g, double delta) {
  return 2.0 * g + (delta * delta / (z - m) + m - z) / (2.0 * g);
}

KSequence k_sequence(double z, double g, double delta, unsigned n_max, double pole_guard,
                     bool allow_pole_adjacent) {
  check_coupling(g);
  if (n_max == 0) throw std::invalid_argument("k_sequence: n_max must be >= 1");
  if (!allow_pole_adjacent && n_max >= 1) {
    if (int p = nearby_pole(z, n_max - 1, pole_guard); p >= 0) throw PoleGuardError(z, p);
  }
  KSequence seq{z, g, delta, {}};
  seq.values.reserve(n_max + 1);
  seq.values.push_back(1.0);
  seq.values.push_back(f_coefficient(0, z, g, delta));
  for (unsigned n = 2; n <= n_max; ++n) {
    const double f = f_coefficient(static_cast<int>(n) - 1, z, g, delta);
    seq.values.push_back((f * seq.values[n - 1] - seq.values[n - 2]) / n);
  }
  return seq;
}

double recursion_residual(const KSequence& seq) {
  double worst = 0.0;
  const auto& K = seq.values;
  for (std::size_t n = 2; n < K.size(); ++n) {
    const double f = f_coefficient(static_cast<int>(n) - 1, seq.z, seq.g, seq.delta);
    const double lhs = static_cast<double>(n) * K[n];
    const double r = lhs - f * K[n - 1] + K[n - 2];
    const double scale = std::max({std::abs(lhs), std::abs(f * K[n - 1]), std::abs(K[n - 2])});
    if (scale > 0.0) worst = std::max(worst, std::abs(r) / scale);
  }
  return worst;
}

double juddian_residual(unsigned n, double g, double delta) {
  if (n == 0) throw std::invalid_argument("juddian_residual: n must be >= 1");
  // Only f_0 .. f_{n-1} enter, and their poles sit at z = 0 .. n-1, not at n.
  return k_sequence(static_cast<double>(n), g, delta, n, 0.0, true).values[n];
}

double juddian_certificate(unsigned n, double g, double delta) {
  const double k = juddian_residual(n, g, delta);
  if (k == 0.0) return 0.0;
  const double hg = 1e-7 * std::max(1.0, g);
  const double hd = 1e-7 * std::max(1.0, std::abs(delta));
  const double gh = std::min(hg, 0.5 * g);
  const double dg = (juddian_residual(n, g + gh, delta) - juddian_residual(n, g - gh, delta)) / (2.0 * gh);
  const double dd = (juddian_residual(n, g, delta + hd) - juddian_residual(n, g, delta - hd)) / (2.0 * hd);
  const double grad = std::hypot(dg, dd);
  return grad > 0.0 ? std::abs(k) / grad : std::numeric_limits<double>::infinity();
}

GSample g_pm(double z, double g, double delta, const GSeriesOptions& opts) {
  check_coupling(g);
  if (int p = nearby_pole(z, opts.n_cap, opts.pole_guard); p >= 0) throw PoleGuardError(z, p);

  GSample s;
  s.z = z;
  Accumulator plus{0.0, 0.0, opts.compensated};
  Accumulator minus{0.0, 0.0, opts.compensated};
  // u_n = K_n g^n, carried directly so that neither factor overflows:
  // n u_n = g f_{n-1} u_{n-1} - g^2 u_{n-2}.
  double u_prev = 0.0;
  double u_cur = 1.0;
  unsigned quiet = 0;
  for (unsigned n = 0; n <= opts.n_cap; ++n) {
    if (n >= 1) {
      const double gf = g * f_coefficient(static_cast<int>(n) - 1, z, g, delta);
      const double u_next = (gf * u_cur - g * g * u_prev) / n;
      u_prev = u_cur;
      u_cur = u_next;
    }
    const double base = u_cur;
    const double shift = delta / (z - n);
    const double tp = base * (1.0 - shift);
    const double tm = base * (1.0 + shift);
    plus.add(tp);
    minus.add(tm);
    s.truncation_n = n;
    const bool small = std::abs(tp) < opts.rel_tol * std::abs(plus.sum) &&
                       std::abs(tm) < opts.rel_tol * std::abs(minus.sum);
    quiet = small ? quiet + 1 : 0;
    if (quiet >= opts.tail_window) {
      s.converged = true;
      break;
    }
  }
  s.g_plus = plus.sum;
  s.g_minus = minus.sum;
  return s;
}

std::vector<GSample> g_scan(double z_lo, double z_hi, unsigned samples, double g, double delta,
                            const GSeriesOptions& opts, unsigned threads) {
  if (!(z_lo < z_hi)) throw std::invalid_argument("g_scan: need z_lo < z_hi");
  if (samples == 0) throw std::invalid_argument("g_scan: samples must be >= 1");
  std::vector<double> grid;
  for (unsigned j = 0; j < samples; ++j) {
    const double z = samples == 1 ? 0.5 * (z_lo + z_hi)
                                  : z_lo + (z_hi - z_lo) * j / static_cast<double>(samples - 1);
    if (nearby_pole(z, opts.n_cap, opts.pole_guard) < 0) grid.push_back(z);
  }
  std::vector<GSample> out(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) { out[i] = g_pm(grid[i], g, delta, opts); });
  return out;
}

std::string g_samples_csv(const std::vector<GSample>& samples) {
  std::ostringstream os;
  os << "z,g_plus,g_minus,converged,truncation_n\n";
  for (const auto& s : samples) {
    os << format_double(s.z) << ',' << format_double(s.g_plus) << ',' << format_double(s.g_minus)
       << ',' << (s.converged ? 1 : 0) << ',' << s.truncation_n << '\n';
  }
  return os.str();
}

}  // namespace rabi
