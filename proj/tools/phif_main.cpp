// phif command-line tool: coefficient tables, evaluation, zero enumeration,
// zero clouds, and verification suites, with machine-readable output.
//
// stdout carries data (json/csv/pgm), stderr carries logs.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <complex>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phif/phif.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  phif::EvalConfig cfg;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool pgm_ok = false) {
  cmd->add_option("--series-cutoff", o.cfg.series_cutoff,
                  "Taylor cutoff N (default 64)");
  cmd->add_option("--product-depth", o.cfg.product_depth,
                  "infinite-product truncation depth D (default 60)");
  cmd->add_option("--precision", o.cfg.precision,
                  "requested mantissa bits, >= 53 (default 53)");
  cmd->add_option("--tolerance", o.cfg.tolerance,
                  "residual tolerance (default 1e-10)");
  auto formats = pgm_ok ? std::vector<std::string>{"json", "csv", "pgm"}
                        : std::vector<std::string>{"json", "csv"};
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(formats));
}

json config_json(const phif::EvalConfig& cfg) {
  return {{"series_cutoff", cfg.series_cutoff},
          {"product_depth", cfg.product_depth},
          {"precision", cfg.precision},
          {"tolerance", cfg.tolerance}};
}

json complex_json(std::complex<double> z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_coeffs(int N, const CommonOpts& o) {
  const phif::TaylorTable tab = phif::taylor_coeffs(N);
  const int bits = o.cfg.precision;
  const int digits = (int)(bits * 0.30103) + 2;
  auto value_str = [&](const phif::QuadNum& q) {
    if (bits <= 53) return phif::format_complex({q.to_double(), 0.0});
    return q.to_float(bits).str(digits, std::ios_base::scientific);
  };
  auto bound = [&](const phif::QuadNum& q) {
    return std::abs(q.to_double()) * std::ldexp(1.0, -bits + 1);
  };
  if (o.format == "csv") {
    std::cout << "n,exact,value,error_bound\n";
    for (int n = 0; n <= N; ++n)
      std::cout << n << ",\"" << tab.coeffs[n].to_string() << "\","
                << value_str(tab.coeffs[n]) << "," << bound(tab.coeffs[n])
                << "\n";
    return 0;
  }
  json rows = json::array();
  for (int n = 0; n <= N; ++n)
    rows.push_back({{"n", n},
                    {"exact", tab.coeffs[n].to_string()},
                    {"value", value_str(tab.coeffs[n])},
                    {"error_bound", bound(tab.coeffs[n])}});
  emit({{"command", "coeffs"},
        {"config", config_json(o.cfg)},
        {"results", rows}});
  return 0;
}

int cmd_eval(const std::string& which, const std::string& ztext,
             const CommonOpts& o) {
  const std::complex<double> z = phif::parse_complex(ztext);
  phif::EvalResult r;
  std::string name;
  if (which == "f") {
    r = phif::eval_f_err(z, o.cfg);
    name = "f(z)";
  } else if (which == "f'" || which == "fp") {
    r = phif::eval_f_prime_err(z, o.cfg);
    name = "f'(z)";
  } else if (which == "g") {
    r = phif::eval_g_err(z, o.cfg);
    name = "g(w)";
  } else if (which == "g'" || which == "gp") {
    r = phif::eval_g_prime_err(z, o.cfg);
    name = "g'(w)";
  } else {
    throw CLI::ValidationError("eval", "function must be one of f, f', g, g'");
  }
  if (o.format == "csv") {
    std::cout << "name,re,im,error_bound\n"
              << name << "," << phif::format_complex({r.value.real(), 0.0})
              << "," << phif::format_complex({r.value.imag(), 0.0}) << ","
              << r.error_bound << "\n";
    return 0;
  }
  emit({{"command", "eval"},
        {"config", config_json(o.cfg)},
        {"results",
         json::array({{{"name", name},
                       {"argument", complex_json(z)},
                       {"value", complex_json(r.value)},
                       {"error_bound", r.error_bound}}})}});
  return 0;
}

int cmd_zeros(int L, const CommonOpts& o) {
  const auto recs = phif::enumerate_simple_zeros(L, o.cfg);
  if (o.format == "csv") {
    std::cout << "re,im,ring,residual,fprime_magnitude,sigma\n";
    for (const auto& r : recs)
      std::cout << phif::format_complex({r.value.real(), 0.0}) << ","
                << phif::format_complex({r.value.imag(), 0.0}) << "," << r.ring
                << "," << r.residual << "," << r.derivative_magnitude << ","
                << r.seq.to_string() << "\n";
    return 0;
  }
  json rows = json::array();
  for (const auto& r : recs)
    rows.push_back({{"value", complex_json(r.value)},
                    {"ring", r.ring},
                    {"residual", r.residual},
                    // first-order distance to the true zero
                    {"error_bound",
                     r.residual / std::max(r.derivative_magnitude, 1e-300)},
                    {"fprime_magnitude", r.derivative_magnitude},
                    {"sigma", r.seq.to_string()}});
  emit({{"command", "zeros"},
        {"config", config_json(o.cfg)},
        {"depth", L},
        {"results", rows}});
  return 0;
}

int cmd_cloud(int n, int n1, std::uint64_t budget, int threads, int raster,
              const CommonOpts& o) {
  const auto pts = phif::approx_zero_cloud(n, n1, budget, threads);
  if (o.format == "pgm") {
    const double R = phif::two_phi_pow_d(n - n1 + 1);
    std::vector<std::complex<double>> vals;
    vals.reserve(pts.size());
    for (const auto& p : pts) vals.push_back(p.value);
    phif::write_pgm(std::cout,
                    phif::rasterize(vals, raster, raster, -R, R, -R, R));
    return 0;
  }
  if (o.format == "csv") {
    std::cout << "re,im,ring\n";
    for (const auto& p : pts)
      std::cout << phif::format_complex({p.value.real(), 0.0}) << ","
                << phif::format_complex({p.value.imag(), 0.0}) << "," << p.ring
                << "\n";
    return 0;
  }
  json rows = json::array();
  for (const auto& p : pts)
    rows.push_back({{"value", complex_json(p.value)},
                    {"ring", p.ring},
                    {"error_bound", phif::two_phi_pow_d(n - 2 * n1 + 2)}});
  emit({{"command", "cloud"},
        {"config", config_json(o.cfg)},
        {"n", n},
        {"n1", n1},
        {"results", rows}});
  return 0;
}

int cmd_verify(const std::string& suite, const CommonOpts& o) {
  std::vector<std::string> names;
  if (suite == "all")
    names = phif::verify_suite_names();
  else
    names.push_back(suite);
  bool all_pass = true;
  json reports = json::array();
  for (const auto& name : names) {
    const phif::SuiteReport rep = phif::run_verify_suite(name, o.cfg);
    all_pass = all_pass && rep.passed();
    if (o.format == "json") {
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"observed", c.observed},
                          {"threshold", c.threshold},
                          {"pass", c.pass},
                          {"note", c.note}});
      reports.push_back({{"suite", rep.suite},
                         {"pass", rep.passed()},
                         {"seconds", rep.seconds},
                         {"checks", checks}});
    } else {
      std::cout << phif::format_report(rep);
    }
  }
  if (o.format == "json")
    emit({{"command", "verify"},
          {"config", config_json(o.cfg)},
          {"results", reports}});
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "phif: the entire function f with f(2 phi z) = f(z)^2 - 1, f(0) = phi "
      "(inverse of the golden-ratio nested-radical map): exact Taylor "
      "coefficients over Q(sqrt5), scaled evaluation, simple-zero "
      "enumeration, Hadamard products, and verification suites"};
  app.require_subcommand(1);

  CommonOpts opt;

  auto* coeffs = app.add_subcommand("coeffs", "exact and floating Taylor table");
  int N = 16;
  coeffs->add_option("N", N, "largest coefficient index")->required();
  add_common(coeffs, opt);

  auto* eval = app.add_subcommand("eval", "evaluate f, f', g or g'");
  std::string which, zarg;
  eval->add_option("function", which, "one of: f, f', g, g' (fp/gp aliases)")
      ->required();
  eval->add_option("z", zarg, "complex argument, e.g. '0.25-1e-3i'")
      ->required();
  add_common(eval, opt);

  auto* zeros = app.add_subcommand("zeros", "enumerate verified simple zeros");
  int L = 6;
  zeros->add_option("--depth", L, "last -1 allowed at position <= L (default 6)");
  add_common(zeros, opt);

  auto* cloud = app.add_subcommand(
      "cloud", "approximate zero cloud from primitive zeros of P_n");
  int cn = 20, cn1 = 8, threads = 1, raster = 512;
  std::uint64_t budget = 1ull << 24;
  cloud->add_option("n", cn, "polynomial index n")->required();
  cloud->add_option("n1", cn1, "annulus index n1 (points land in ring n-n1)")
      ->required();
  cloud->add_option("--budget", budget, "node budget (default 2^24)");
  cloud->add_option("--threads", threads, "parallel subtree walkers");
  cloud->add_option("--raster", raster, "pgm raster size (default 512)");
  add_common(cloud, opt, /*pgm_ok=*/true);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify
      ->add_option("suite", suite,
                   "poincare|inverse|representations|moments|multiplicity|"
                   "order|paris|coeffs|primitive|cloud|all")
      ->required();
  add_common(verify, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    opt.cfg.validate();
    if (coeffs->parsed()) return cmd_coeffs(N, opt);
    if (eval->parsed()) return cmd_eval(which, zarg, opt);
    if (zeros->parsed()) return cmd_zeros(L, opt);
    if (cloud->parsed()) return cmd_cloud(cn, cn1, budget, threads, raster, opt);
    if (verify->parsed()) return cmd_verify(suite, opt);
  } catch (const phif::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const phif::CrossCheckFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const phif::SimplicityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
