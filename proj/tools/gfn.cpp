// Command-line front end: point evaluation, figure sweeps, susceptibility
// spectra and the identity selftest.
//
// Exit codes: 0 success, 1 selftest failure, 2 domain/usage error,
// 3 convergence failure, 4 I/O failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gfn/errors.hpp"
#include "gfn/gfunction.hpp"
#include "gfn/sweep.hpp"
#include "selftest.hpp"

namespace {

std::optional<double> env_tolerance() {
  const char* s = std::getenv("GFN_TOL");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0.0)) {
    std::cerr << "ignoring malformed GFN_TOL='" << s << "'\n";
    return std::nullopt;
  }
  return v;
}

int env_threads() {
  const char* s = std::getenv("GFN_THREADS");
  if (!s || !*s) return 0;
  return std::atoi(s);
}

gfn::QuadratureConfig make_config(std::optional<double> flag_tol) {
  gfn::QuadratureConfig cfg;
  // Flag beats environment beats default.
  if (flag_tol) {
    cfg.abs_tol = *flag_tol;
    cfg.rel_tol = *flag_tol * 100.0;
  } else if (auto env = env_tolerance()) {
    cfg.abs_tol = *env;
    cfg.rel_tol = *env * 100.0;
  }
  return cfg;
}

void run_sweep_command(const gfn::SweepSpec& spec, const std::string& out_path,
                       std::optional<double> flag_tol) {
  const auto records = gfn::run_sweep(spec, make_config(flag_tol), env_threads());
  gfn::write_records(records, out_path);
  std::cout << out_path << " (" << records.size() << " points)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g-function evaluation, figure sweeps and dielectric response"};
  app.require_subcommand(1);

  int m = 1;
  double re = 0.0, im = 0.0;
  std::optional<double> tol;
  bool json = false;
  double fixed = 0.0, lo = 0.0, hi = 1.0;
  int steps = 2;
  std::string out_path;
  gfn::RotorSpec rotor;
  gfn::ResponseParams params;

  CLI::App* eval = app.add_subcommand("eval", "evaluate g_m(z) at one point");
  eval->add_option("--m", m, "order m")->required();
  eval->add_option("--re", re, "Re z")->required();
  eval->add_option("--im", im, "Im z")->required();
  eval->add_option("--tol", tol, "absolute tolerance override");
  eval->add_flag("--json", json, "emit a JSON object instead of 're im err'");

  CLI::App* sweep_r =
      app.add_subcommand("sweep-r", "radial sweep of g_m(r e^{-i theta})");
  sweep_r->add_option("--m", m)->required();
  sweep_r->add_option("--theta", fixed, "fixed phase angle, radians")->required();
  sweep_r->add_option("--lo", lo)->required();
  sweep_r->add_option("--hi", hi)->required();
  sweep_r->add_option("--steps", steps)->required();
  sweep_r->add_option("--out", out_path, "output CSV/JSON path")->required();
  sweep_r->add_option("--tol", tol);

  CLI::App* sweep_t =
      app.add_subcommand("sweep-theta", "phase sweep of g_m(r e^{-i theta})");
  sweep_t->add_option("--m", m)->required();
  sweep_t->add_option("--r", fixed, "fixed modulus")->required();
  sweep_t->add_option("--lo", lo)->required();
  sweep_t->add_option("--hi", hi)->required();
  sweep_t->add_option("--steps", steps)->required();
  sweep_t->add_option("--out", out_path, "output CSV/JSON path")->required();
  sweep_t->add_option("--tol", tol);

  CLI::App* chi =
      app.add_subcommand("chi", "susceptibility ratio spectrum over omega");
  chi->add_option("--i1", rotor.i1)->required();
  chi->add_option("--i3", rotor.i3)->required();
  chi->add_option("--beta", params.beta)->required();
  chi->add_option("--tau", params.tau)->required();
  chi->add_option("--omega-lo", lo)->required();
  chi->add_option("--omega-hi", hi)->required();
  chi->add_option("--steps", steps)->required();
  chi->add_option("--out", out_path, "output CSV/JSON path")->required();
  chi->add_option("--tol", tol);

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the full identity and invariant grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      const gfn::EvalResult r = gfn::g(m, {re, im}, make_config(tol));
      if (json)
        std::cout << "{\"re\": " << gfn::format_float17(r.value.real())
                  << ", \"im\": " << gfn::format_float17(r.value.imag())
                  << ", \"err\": " << gfn::format_float17(r.abs_error_estimate)
                  << "}\n";
      else
        std::cout << gfn::format_float17(r.value.real()) << ' '
                  << gfn::format_float17(r.value.imag()) << ' '
                  << gfn::format_float17(r.abs_error_estimate) << '\n';
    } else if (sweep_r->parsed()) {
      gfn::SweepSpec spec;
      spec.kind = gfn::SweepKind::radial;
      spec.m = m;
      spec.fixed = fixed;
      spec.lo = lo;
      spec.hi = hi;
      spec.steps = steps;
      run_sweep_command(spec, out_path, tol);
    } else if (sweep_t->parsed()) {
      gfn::SweepSpec spec;
      spec.kind = gfn::SweepKind::phase;
      spec.m = m;
      spec.fixed = fixed;
      spec.lo = lo;
      spec.hi = hi;
      spec.steps = steps;
      run_sweep_command(spec, out_path, tol);
    } else if (chi->parsed()) {
      gfn::SweepSpec spec;
      spec.kind = gfn::SweepKind::chi_spectrum;
      spec.lo = lo;
      spec.hi = hi;
      spec.steps = steps;
      spec.rotor = rotor;
      spec.params = params;
      run_sweep_command(spec, out_path, tol);
    } else if (selftest->parsed()) {
      return gfn::cli::run_selftest(std::cout, env_tolerance()) ? 0 : 1;
    }
  } catch (const gfn::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const gfn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const gfn::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return 3;
  } catch (const gfn::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
