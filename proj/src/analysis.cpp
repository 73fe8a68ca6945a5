#include "rabi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rabi/constraint_poly.hpp"
#include "rabi/format.hpp"
#include "rabi/laguerre.hpp"
#include "rabi/parallel.hpp"
#include "rabi/tridiag.hpp"

namespace rabi {

std::vector<double> alpha_zeros(std::size_t N, double y, double tol) {
  if (N == 0) throw std::invalid_argument("alpha_zeros: N must be >= 1");
  return all_eigenvalues(build_A(N, y), tol);
}

BoundCheck verify_weyl(std::size_t N, double y, double slack) {
  if (!(y > 0.0)) throw std::invalid_argument("verify_weyl: y must be positive");
  const double eps = slack * std::max(1.0, y);
  const auto base = alpha_zeros(N, 0.0);
  const auto half = alpha_zeros(N, 0.5 * y);
  const auto full = alpha_zeros(N, y);

  BoundCheck out;
  out.lower_margin.resize(N);
  out.upper_margin.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double shift = full[i] - base[i];
    out.lower_margin[i] = shift - (-y) + eps;
    out.upper_margin[i] = -y / static_cast<double>(N) + eps - shift;
    const bool decreasing = full[i] < half[i] && half[i] < base[i];
    if (out.ok && (out.lower_margin[i] < 0.0 || out.upper_margin[i] < 0.0 || !decreasing)) {
      out.ok = false;
      out.violating_index = i + 1;
    }
  }
  return out;
}

BoundCheck verify_interlacing(const std::vector<double>& alphas, std::size_t m, double y, double slack) {
  const std::size_t N = alphas.size();
  if (m < 1 || 2 * m > N) throw std::invalid_argument("verify_interlacing: need 1 <= m <= N/2");
  const double eps = slack * std::max(1.0, y);
  BoundCheck out;
  const std::size_t n = N - m;
  if (m + 1 > n) return out;  // empty index range
  const auto lambda = zeros_newton(static_cast<unsigned>(n), 1e-14).zeros;
  for (std::size_t k = m + 1; k <= n; ++k) {
    const double a = alphas[k - 1];
    const double lower = lambda[k - m - 1] - y / static_cast<double>(m + 1);
    const double upper = lambda[k - 1];
    out.lower_margin.push_back(a - lower + eps);
    out.upper_margin.push_back(upper + eps - a);
    if (out.ok && (out.lower_margin.back() < 0.0 || out.upper_margin.back() <= 0.0)) {
      out.ok = false;
      out.violating_index = k;
    }
  }
  return out;
}

BoundCheck verify_interlacing(std::size_t N, std::size_t m, double y, double slack) {
  if (!(y > 0.0)) throw std::invalid_argument("verify_interlacing: y must be positive");
  if (m < 1 || 2 * m > N) throw std::invalid_argument("verify_interlacing: need 1 <= m <= N/2");
  return verify_interlacing(alpha_zeros(N, y), m, y, slack);
}

SpectrumReport spectrum_report(std::size_t N, double y) {
  SpectrumReport r;
  r.N = N;
  r.y = y;
  r.alphas = alpha_zeros(N, y);
  r.positive_count = static_cast<std::size_t>(
      std::count_if(r.alphas.begin(), r.alphas.end(), [](double a) { return a > 0.0; }));
  r.weyl_ok = y > 0.0 ? verify_weyl(N, y).ok : true;
  if (y > 0.0 && N >= 2) {
    const auto m = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(N), 0.25)));
    r.interlace_ok = 2 * m <= N ? verify_interlacing(r.alphas, m, y).ok : true;
  } else {
    r.interlace_ok = true;
  }
  return r;
}

std::size_t count_alphas_at_most(std::size_t N, double y, double x) {
  return count_at_most(build_A(N, y), x);
}

DensityRecord juddian_count(std::size_t N, double delta, double gamma) {
  if (N == 0) throw std::invalid_argument("juddian_count: N must be >= 1");
  if (!(delta > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("juddian_count: delta and gamma must be positive");
  DensityRecord r;
  r.N = N;
  r.delta = delta;
  r.gamma = gamma;
  const double threshold = 4.0 * gamma * gamma;
  r.count = count_alphas_at_most(N, delta * delta, threshold);
  r.asymptotic = 4.0 / std::numbers::pi * gamma * std::sqrt(static_cast<double>(N));
  r.ratio = static_cast<double>(r.count) / r.asymptotic;
  return r;
}

std::vector<DensityRecord> density_scan(double delta, double gamma, const std::vector<std::size_t>& Ns,
                                        unsigned threads) {
  if (!std::is_sorted(Ns.begin(), Ns.end())) throw std::invalid_argument("density_scan: Ns must ascend");
  std::vector<DensityRecord> out(Ns.size());
  parallel_for(Ns.size(), threads, [&](std::size_t i) { out[i] = juddian_count(Ns[i], delta, gamma); });
  return out;
}

std::string density_csv(const std::vector<DensityRecord>& rows) {
  std::ostringstream os;
  os << "N,delta,gamma,count,asymptotic,ratio\n";
  for (const auto& r : rows) {
    os << r.N << ',' << format_double(r.delta) << ',' << format_double(r.gamma) << ',' << r.count << ','
       << format_double(r.asymptotic) << ',' << format_double(r.ratio) << '\n';
  }
  return os.str();
}

OracleReport check_oracle_triangle(unsigned n_max, unsigned points_per_n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  OracleReport r;
  for (unsigned n = 1; n <= n_max; ++n) {
    const BivariatePoly P = kus_polynomial(n);
    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), n);
    for (unsigned k = 0; k < points_per_n; ++k) {
      mpq_class x(num(rng), den(rng));
      mpq_class y(std::abs(num(rng)), den(rng));
      x.canonicalize();
      y.canonicalize();
      const mpq_class direct = eval_exact(P, x, y);
      const mpq_class via_a = n_fact * charpoly_eval(build_A_exact(n, y), x);
      const mpq_class via_s = det_oracle_S(n, x, y);
      ++r.checked;
      if (direct != via_a || direct != via_s) {
        if (r.ok) r.first_bad_n = n;
        r.ok = false;
      }
    }
  }
  return r;
}

}  // namespace rabi
