#include "rabi/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rabi/analysis.hpp"
#include "rabi/constraint_poly.hpp"
#include "rabi/format.hpp"
#include "rabi/gfunction.hpp"
#include "rabi/juddian.hpp"
#include "rabi/parallel.hpp"
#include "rabi/tridiag.hpp"

namespace rabi::cli {

void RunConfig::validate() const {
  if (!(bisect_tol > 0.0) || !(residual_tol > 0.0) || !(pole_guard > 0.0))
    throw std::invalid_argument("tolerances must be positive");
  if (exact_cap < 1) throw std::invalid_argument("exact cap must be >= 1");
  if (scan_grid < 2) throw std::invalid_argument("scan grid must have >= 2 samples");
  if (branch_steps < 2) throw std::invalid_argument("branch steps must be >= 2");
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
}

namespace {

std::string json_array_of_strings(const std::vector<mpq_class>& coeffs) {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += '"' + coeffs[i].get_str() + '"';
  }
  return s + "]";
}

struct PolyArgs {
  unsigned n = 1;
  std::vector<std::string> eval;
  std::string restrict_axis;
};

struct ZerosArgs {
  std::size_t N = 1;
  double y = 0.0;
  std::vector<double> range;
};

struct DensityArgs {
  double delta = 0.0;
  double gamma = 0.0;
  std::vector<std::size_t> Ns;
};

struct JuddArgs {
  unsigned m = 1;
  unsigned N = 2;
};

struct GScanArgs {
  double z_lo = 0.0;
  double z_hi = 0.0;
  unsigned samples = 1;
  double g = 0.0;
  double delta = 0.0;
};

struct BranchArgs {
  unsigned n = 1;
  unsigned m = 1;
};

struct VerifyArgs {
  std::string suite = "all";
  unsigned oracle_n = 12;
  std::size_t N = 200;
  double y = 2.0;
  std::size_t m = 0;  // 0: ceil(N^{1/4})
  double interlace_y = 0.5;
};

void cmd_poly(const PolyArgs& a, const RunConfig& cfg, std::ostream& out) {
  const BivariatePoly P = kus_polynomial(a.n, cfg.exact_cap);
  if (!a.eval.empty()) {
    const mpq_class v = eval_exact(P, parse_rational(a.eval[0]), parse_rational(a.eval[1]));
    out << v.get_str() << '\n';
    return;
  }
  if (!a.restrict_axis.empty()) {
    const UnivariatePoly u = a.restrict_axis == "x" ? restrict_to_x_axis(P) : restrict_to_y_axis(P);
    out << "{\"n\":" << a.n << ",\"axis\":\"" << a.restrict_axis
        << "\",\"coeffs\":" << json_array_of_strings(u.coeffs) << "}\n";
    return;
  }
  out << to_json(a.n, P) << '\n';
}

void cmd_zeros(const ZerosArgs& a, const RunConfig& cfg, std::ostream& out) {
  const auto T = build_A(a.N, a.y);
  std::vector<double> alphas = all_eigenvalues(T, cfg.bisect_tol);
  std::size_t first_k = 1;
  if (!a.range.empty()) {
    const std::size_t below = sturm_count(T, a.range[0]);
    alphas = eigenvalues_in(T, a.range[0], a.range[1], cfg.bisect_tol);
    first_k = below + 1;
  }
  const bool json = cfg.format == OutputFormat::Json;
  if (!json) out << "k,alpha\n";
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (json) {
      out << "{\"k\":" << first_k + i << ",\"alpha\":" << format_double(alphas[i]) << "}\n";
    } else {
      out << first_k + i << ',' << format_double(alphas[i]) << '\n';
    }
  }
}

void cmd_density(const DensityArgs& a, const RunConfig& cfg, std::ostream& out) {
  const auto rows = density_scan(a.delta, a.gamma, a.Ns, cfg.threads);
  if (cfg.format == OutputFormat::Json) {
    for (const auto& r : rows) {
      out << "{\"N\":" << r.N << ",\"delta\":" << format_double(r.delta) << ",\"gamma\":" << format_double(r.gamma)
          << ",\"count\":" << r.count << ",\"asymptotic\":" << format_double(r.asymptotic)
          << ",\"ratio\":" << format_double(r.ratio) << "}\n";
    }
  } else {
    out << density_csv(rows);
  }
}

void cmd_doublejudd(const JuddArgs& a, const RunConfig& cfg, std::ostream& out) {
  DoubleJuddianOptions opts;
  opts.scan_samples = cfg.scan_grid;
  opts.accept_tol = cfg.residual_tol;
  opts.exact_cap = cfg.exact_cap;
  opts.threads = cfg.threads;
  const auto points = find_double_juddian(a.m, a.N, opts);
  if (cfg.format == OutputFormat::Csv) {
    out << "m,N,i,x,y,g,delta,res_m,res_N\n";
    for (const auto& p : points) {
      out << p.m << ',' << p.N << ',' << p.branch_index << ',' << format_double(p.x) << ',' << format_double(p.y)
          << ',' << format_double(p.g) << ',' << format_double(p.delta) << ',' << format_double(p.residual_m)
          << ',' << format_double(p.residual_N) << '\n';
    }
    return;
  }
  for (const auto& p : points) out << to_json_line(p) << '\n';
}

void cmd_gscan(const GScanArgs& a, const RunConfig& cfg, std::ostream& out) {
  GSeriesOptions opts;
  opts.pole_guard = cfg.pole_guard;
  const auto samples = g_scan(a.z_lo, a.z_hi, a.samples, a.g, a.delta, opts, cfg.threads);
  if (cfg.format == OutputFormat::Json) {
    for (const auto& s : samples) {
      out << "{\"z\":" << format_double(s.z) << ",\"g_plus\":" << format_double(s.g_plus)
          << ",\"g_minus\":" << format_double(s.g_minus) << ",\"converged\":" << (s.converged ? "true" : "false")
          << ",\"truncation_n\":" << s.truncation_n << "}\n";
    }
  } else {
    out << g_samples_csv(samples);
  }
}

void cmd_branch(const BranchArgs& a, const RunConfig& cfg, std::ostream& out) {
  out << branch_csv(trace_branch(a.n, a.m, cfg.branch_steps));
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const bool all = a.suite == "all";
  int code = 0;
  if (all || a.suite == "oracle") {
    const auto r = check_oracle_triangle(a.oracle_n, 20);
    out << "oracle n<=" << a.oracle_n << " points=" << r.checked << ' ' << (r.ok ? "PASS" : "FAIL");
    if (!r.ok) out << " first_bad_n=" << r.first_bad_n;
    out << '\n';
    if (!r.ok) code |= kOracleFailed;
  }
  if (all || a.suite == "weyl") {
    const auto r = verify_weyl(a.N, a.y);
    out << "weyl N=" << a.N << " y=" << format_double(a.y) << ' ' << (r.ok ? "PASS" : "FAIL");
    if (!r.ok) out << " index=" << *r.violating_index;
    out << '\n';
    if (!r.ok) code |= kWeylFailed;
  }
  if (all || a.suite == "interlace") {
    const std::size_t m =
        a.m ? a.m : static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(a.N), 0.25)));
    const auto r = verify_interlacing(a.N, m, a.interlace_y);
    out << "interlace N=" << a.N << " m=" << m << " y=" << format_double(a.interlace_y) << ' '
        << (r.ok ? "PASS" : "FAIL");
    if (!r.ok) out << " index=" << *r.violating_index;
    out << '\n';
    if (!r.ok) code |= kInterlaceFailed;
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constraint polynomials, spectra and Juddian points of the quantum Rabi model", "rabi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file overriding built-in defaults");

  RunConfig cfg;
  cfg.threads = default_thread_count();
  std::string format = "default";
  app.add_option("--bisect-tol", cfg.bisect_tol, "Absolute eigenvalue bisection tolerance");
  app.add_option("--residual-tol", cfg.residual_tol, "Acceptance bound on double-Juddian residuals");
  app.add_option("--pole-guard", cfg.pole_guard, "Exclusion radius around integer z");
  app.add_option("--exact-cap", cfg.exact_cap, "Largest n built in exact arithmetic");
  app.add_option("--scan-grid", cfg.scan_grid, "y-samples scanned for crossings");
  app.add_option("--steps", cfg.branch_steps, "Samples per traced branch");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"default", "csv", "json"}));
  app.add_option("--output,-o", cfg.output_path, "Write output to this file");
  app.add_option("--threads", cfg.threads, "Worker threads");

  PolyArgs poly;
  auto* sc_poly = app.add_subcommand("poly", "Print, evaluate or restrict P_n");
  sc_poly->add_option("n", poly.n, "Degree")->required()->check(CLI::PositiveNumber);
  sc_poly->add_option("--eval", poly.eval, "Evaluate exactly at X Y (rationals such as 1/2 or 0.5)")
      ->expected(2);
  sc_poly->add_option("--restrict", poly.restrict_axis, "Restrict to an axis")->check(CLI::IsMember({"x", "y"}));
  sc_poly->get_option("--eval")->excludes(sc_poly->get_option("--restrict"));

  ZerosArgs zeros;
  auto* sc_zeros = app.add_subcommand("zeros", "Zeros of x -> P_N(x, y)");
  sc_zeros->add_option("N", zeros.N, "Degree")->required()->check(CLI::PositiveNumber);
  sc_zeros->add_option("y", zeros.y, "y = Delta^2")->required()->check(CLI::NonNegativeNumber);
  sc_zeros->add_option("--range", zeros.range, "Only zeros in [LO, HI)")->expected(2);

  DensityArgs density;
  auto* sc_density = app.add_subcommand("density", "Juddian counts against (4/pi) Gamma sqrt(N)");
  sc_density->add_option("delta", density.delta)->required()->check(CLI::PositiveNumber);
  sc_density->add_option("gamma", density.gamma)->required()->check(CLI::PositiveNumber);
  sc_density->add_option("N", density.Ns, "Ascending list of N")->required()->check(CLI::PositiveNumber);

  JuddArgs judd;
  auto* sc_judd = app.add_subcommand("doublejudd", "Parameters carrying Juddian levels m and N");
  sc_judd->add_option("m", judd.m)->required()->check(CLI::PositiveNumber);
  sc_judd->add_option("N", judd.N)->required()->check(CLI::PositiveNumber);

  GScanArgs gscan;
  auto* sc_gscan = app.add_subcommand("gscan", "Sample G_+ and G_- on a z-grid");
  sc_gscan->add_option("z_lo", gscan.z_lo)->required();
  sc_gscan->add_option("z_hi", gscan.z_hi)->required();
  sc_gscan->add_option("n", gscan.samples, "Number of samples")->required()->check(CLI::PositiveNumber);
  sc_gscan->add_option("g", gscan.g)->required()->check(CLI::PositiveNumber);
  sc_gscan->add_option("delta", gscan.delta)->required()->check(CLI::NonNegativeNumber);

  BranchArgs branch;
  auto* sc_branch = app.add_subcommand("branch", "Trace the branch Z_{n,m} as y,x samples");
  sc_branch->add_option("n", branch.n)->required()->check(CLI::PositiveNumber);
  sc_branch->add_option("m", branch.m)->required()->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* sc_verify = app.add_subcommand("verify", "Run verification suites; exit code is a failure bitmask");
  sc_verify->add_option("suite", verify.suite)->check(CLI::IsMember({"weyl", "interlace", "oracle", "all"}));
  sc_verify->add_option("--n", verify.oracle_n, "Largest n for the oracle suite")->check(CLI::PositiveNumber);
  sc_verify->add_option("--N", verify.N, "Matrix size for weyl/interlace")->check(CLI::PositiveNumber);
  sc_verify->add_option("--y", verify.y, "y for the weyl suite")->check(CLI::PositiveNumber);
  sc_verify->add_option("--m", verify.m, "Minor offset for the interlace suite");
  sc_verify->add_option("--iy", verify.interlace_y, "y for the interlace suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    static const std::map<std::string, OutputFormat> formats{
        {"default", OutputFormat::Default}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
    cfg.format = formats.at(format);
    cfg.validate();

    std::ofstream file;
    if (!cfg.output_path.empty()) {
      file.open(cfg.output_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + cfg.output_path);
    }
    std::ostream& sink = cfg.output_path.empty() ? out : file;

    if (*sc_poly) {
      cmd_poly(poly, cfg, sink);
    } else if (*sc_zeros) {
      if (!zeros.range.empty() && !(zeros.range[0] < zeros.range[1]))
        throw std::invalid_argument("--range needs LO < HI");
      cmd_zeros(zeros, cfg, sink);
    } else if (*sc_density) {
      cmd_density(density, cfg, sink);
    } else if (*sc_judd) {
      cmd_doublejudd(judd, cfg, sink);
    } else if (*sc_gscan) {
      cmd_gscan(gscan, cfg, sink);
    } else if (*sc_branch) {
      cmd_branch(branch, cfg, sink);
    } else if (*sc_verify) {
      return cmd_verify(verify, sink);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace rabi::cli
