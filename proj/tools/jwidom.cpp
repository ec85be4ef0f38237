#include "jwidom/io.hpp"
#include "jwidom/minimax.hpp"
#include "jwidom/oracle.hpp"
#include "jwidom/verify.hpp"
#include "jwidom/widom.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitViolation = 3;

// Writes to `path`, or standard output when the path is empty.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--range", "expected lo:hi");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_s = s.substr(0, colon), hi_s = s.substr(colon + 1);
    const double lo = std::stod(lo_s, &used_lo);
    const double hi = std::stod(hi_s, &used_hi);
    if (used_lo != lo_s.size() || used_hi != hi_s.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--range", "expected lo:hi with real numbers");
  }
}

struct SolveArgs {
  double rho_a = 0.0, rho_b = 0.0;
  int degree = 1;
  double tol = 1e-12;
  int max_iter = 60;
  int grid_factor = 30;
  std::string out, format = "json";
};

int run_solve(const SolveArgs& a) {
  try {
    const auto w = jwidom::WeightParams::make(a.rho_a, a.rho_b);
    const auto sol = jwidom::solve(w, a.degree, {a.tol, a.max_iter, a.grid_factor});
    std::string text;
    if (a.format == "json") {
      text = jwidom::io::to_json(sol).dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "degree " << sol.poly.degree << "  norm " << jwidom::io::fmt17(sol.norm) << "  widom "
         << jwidom::io::fmt17(sol.widom) << "  iterations " << sol.iterations << "  defect "
         << sol.levelling_defect << '\n';
      text = os.str();
    }
    if (!emit(a.out, text)) {
      std::cerr << "error: cannot write " << a.out << '\n';
      return kExitUsage;
    }
    return kExitOk;
  } catch (const jwidom::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  }
}

struct WidomArgs {
  double rho_a = 0.0, rho_b = 0.0;
  int n_max = 10;
  double tol = 1e-9;
  std::string out;
};

int run_widom(const WidomArgs& a) {
  try {
    const auto w = jwidom::WeightParams::make(a.rho_a, a.rho_b);
    const auto seq = jwidom::widom_sequence(w, a.n_max, {}, a.tol);
    if (!emit(a.out, jwidom::io::to_json(seq).dump(2) + "\n")) {
      std::cerr << "error: cannot write " << a.out << '\n';
      return kExitUsage;
    }
    return kExitOk;
  } catch (const jwidom::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  }
}

struct ScanArgs {
  int resolution = 40;
  int n_max = 10;
  std::string range = "0:0.8";
  std::string out, svg;
  unsigned threads = 1;
  bool full = false;
};

int run_scan(const ScanArgs& a) {
  jwidom::ScanOptions o;
  std::tie(o.lo, o.hi) = parse_range(a.range);
  o.resolution = a.full ? 250 : a.resolution;
  o.n_max = a.n_max;
  o.threads = a.threads;
  // fail on an unwritable path before spending time on the scan
  std::ofstream csv(a.out, std::ios::binary);
  if (!csv) {
    std::cerr << "error: cannot write " << a.out << '\n';
    return kExitUsage;
  }
  std::ofstream svg;
  if (!a.svg.empty()) {
    svg.open(a.svg, std::ios::binary);
    if (!svg) {
      std::cerr << "error: cannot write " << a.svg << '\n';
      return kExitUsage;
    }
  }
  jwidom::ScanResult r;
  try {
    r = jwidom::scan(o);
  } catch (const jwidom::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  jwidom::io::write_scan_csv(csv, r);
  if (svg.is_open()) jwidom::io::write_scan_svg(svg, r);
  std::size_t failed = 0;
  for (const auto& c : r.cells) failed += c.failed ? 1 : 0;
  std::cerr << r.cells.size() << " cells, " << failed << " failed, " << r.runtime_seconds << " s\n";
  if (!csv || (svg.is_open() && !svg)) {
    std::cerr << "error: write failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string format = "text";
  int n_max_bounds = 1000, grid_bounds = 9;
  std::optional<double> limit_tol;
  int samples = 200;
  int n_max_circle = 5, configs = 50;
  unsigned seed = 12345u;
  int n_max_jacobi = 20, grid_jacobi = 9;
};

int report(const jwidom::VerifyReport& r, const std::string& format) {
  if (format == "json")
    std::cout << jwidom::to_json(r).dump(2) << '\n';
  else
    jwidom::print_report(std::cout, r);
  return r.passed() ? kExitOk : kExitViolation;
}

struct OracleArgs {
  double rho_a = 0.0, rho_b = 0.0;
  int degree = 1;
  int restarts = 32;
};

int run_oracle(const OracleArgs& a) {
  try {
    jwidom::OracleOptions o;
    o.restarts = a.restarts;
    const auto r = jwidom::brute_minimax(jwidom::WeightParams::make(a.rho_a, a.rho_b), a.degree, o);
    nlohmann::json j{{"rho_a", a.rho_a}, {"rho_b", a.rho_b}, {"degree", a.degree},
                     {"nodes", r.nodes},  {"norm", r.norm},   {"widom", std::ldexp(r.norm, a.degree)}};
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

void add_weight_flags(CLI::App* app, double& a, double& b) {
  app->add_option("--rho-a", a, "exponent on (1 - x)")->required()->check(CLI::NonNegativeNumber);
  app->add_option("--rho-b", b, "exponent on (1 + x)")->required()->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Chebyshev polynomials and Widom factors for Jacobi weights"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "minimax polynomial for one weight and degree");
  add_weight_flags(solve, sa.rho_a, sa.rho_b);
  solve->add_option("--degree", sa.degree)->required()->check(CLI::Range(1, 100));
  solve->add_option("--tol", sa.tol)->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", sa.max_iter)->check(CLI::PositiveNumber);
  solve->add_option("--grid-factor", sa.grid_factor)->check(CLI::Range(10, 10000));
  solve->add_option("--out", sa.out, "output path (default: standard output)");
  solve->add_option("--format", sa.format)->check(CLI::IsMember({"json", "text"}));

  WidomArgs wa;
  auto* widom = app.add_subcommand("widom", "Widom factors W_1..W_nmax and their trend");
  add_weight_flags(widom, wa.rho_a, wa.rho_b);
  widom->add_option("--n-max", wa.n_max)->required()->check(CLI::Range(2, 100));
  widom->add_option("--tol", wa.tol, "classification tolerance")->check(CLI::PositiveNumber);
  widom->add_option("--out", wa.out);

  ScanArgs ca;
  auto* scan = app.add_subcommand("scan", "classify Widom sequences on a parameter grid");
  scan->add_option("--resolution", ca.resolution)->check(CLI::Range(2, 100000));
  scan->add_option("--n-max", ca.n_max)->check(CLI::Range(2, 100));
  scan->add_option("--range", ca.range, "lo:hi");
  scan->add_option("--out", ca.out, "CSV path")->required();
  scan->add_option("--svg", ca.svg, "heat map path");
  scan->add_option("--threads", ca.threads, "worker threads, 0 for all cores");
  scan->add_flag("--full", ca.full, "250 x 250 grid; takes hours on one core");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "batch property checks");
  verify->require_subcommand(1);
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", va.format)->check(CLI::IsMember({"json", "text"}));
  };
  auto* v_bounds = verify->add_subcommand("bounds", "monotonicity and limit of M_n");
  v_bounds->add_option("--n-max", va.n_max_bounds)->check(CLI::Range(2, 1000000));
  v_bounds->add_option("--grid", va.grid_bounds)->check(CLI::Range(2, 1000));
  v_bounds->add_option("--limit-tol", va.limit_tol, "also assert |M_nmax - limit| <= this");
  add_format(v_bounds);
  auto* v_coeffs = verify->add_subcommand("coeffs", "sign of c0, c1, c2 on the triangle");
  v_coeffs->add_option("--samples", va.samples)->check(CLI::Range(2, 100000));
  add_format(v_coeffs);
  auto* v_circle = verify->add_subcommand("circle", "circle correspondence and circle lemmas");
  v_circle->add_option("--n-max", va.n_max_circle)->check(CLI::Range(0, 30));
  v_circle->add_option("--configs", va.configs)->check(CLI::Range(1, 100000));
  v_circle->add_option("--seed", va.seed);
  add_format(v_circle);
  auto* v_jacobi = verify->add_subcommand("jacobi", "W_n, weighted Jacobi sup and M_n chain");
  v_jacobi->add_option("--n-max", va.n_max_jacobi)->check(CLI::Range(1, 100));
  v_jacobi->add_option("--grid", va.grid_jacobi)->check(CLI::Range(2, 1000));
  add_format(v_jacobi);

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "direct search minimax for degree <= 3");
  add_weight_flags(oracle, oa.rho_a, oa.rho_b);
  oracle->add_option("--degree", oa.degree)->required()->check(CLI::Range(1, 3));
  oracle->add_option("--restarts", oa.restarts)->check(CLI::Range(1, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return run_solve(sa);
    if (*widom) return run_widom(wa);
    if (*scan) return run_scan(ca);
    if (*oracle) return run_oracle(oa);
    if (*v_bounds) return report(jwidom::verify_bounds(va.n_max_bounds, va.grid_bounds, va.limit_tol), va.format);
    if (*v_coeffs) return report(jwidom::verify_coeffs(va.samples), va.format);
    if (*v_circle)
      return report(jwidom::verify_circle(va.n_max_circle, va.configs, va.seed), va.format);
    if (*v_jacobi) return report(jwidom::verify_jacobi(va.n_max_jacobi, va.grid_jacobi), va.format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitUsage;
}
