#include "gfn/quadrature.hpp"

#include <cmath>
#include <string>

#include "gfn/detail/engine.hpp"
#include "gfn/errors.hpp"

namespace gfn {

namespace {

detail::TailEnvelope envelope_of(const Integrand& f) {
  detail::TailEnvelope env;
  env.amplitude = f.amplitude;
  env.poly_degree = f.poly_degree;
  switch (f.decay) {
    case DecayClass::gaussian_tail:
      env.gauss_rate = f.rate;
      break;
    case DecayClass::exponential_tail:
      env.exp_rate = f.rate;
      break;
    case DecayClass::bounded_oscillatory:
      if (f.osc_period <= 0.0)
        throw DomainError("bounded_oscillatory integrand needs osc_period > 0");
      env.osc_freq = M_PI / f.osc_period;
      break;
  }
  return env;
}

EvalResult to_result(const detail::Outcome<Complex>& o) {
  return {o.integral, o.error, std::max(o.subdivisions, 1)};
}

}  // namespace

EvalResult integrate_semi_infinite(const Integrand& f, double lower,
                                   const QuadratureConfig& cfg) {
  if (!f.eval) throw DomainError("integrand has no evaluator");
  if (!(lower >= 0.0) || !std::isfinite(lower))
    throw DomainError("lower bound must be finite and >= 0");
  detail::TailEnvelope env = envelope_of(f);
  if (f.decay == DecayClass::bounded_oscillatory &&
      cfg.oscillation_policy != OscillationPolicy::cell_sum_accelerated)
    throw DomainError("bounded_oscillatory integrand requires the "
                      "cell_sum_accelerated oscillation policy");
  auto eval = [&f](double x) { return f.eval(x); };
  return to_result(detail::tail_integrate<Complex>(eval, lower, env, cfg));
}

Complex oracle_integrate(const Integrand& f, double lower,
                         const QuadratureConfig& cfg) {
  if (!f.eval) throw DomainError("integrand has no evaluator");
  constexpr double kAgreeTol = 1e-12;   // successive-refinement agreement
  constexpr double kTailTarget = 1e-14; // truncated-tail bound

  auto simpson = [&f](double a, double b, long n) {
    // n even
    const double h = (b - a) / static_cast<double>(n);
    Complex sum = f.eval(a) + f.eval(b);
    for (long i = 1; i < n; ++i) {
      const double x = a + h * static_cast<double>(i);
      sum += (i % 2 == 1 ? 4.0 : 2.0) * f.eval(x);
    }
    return sum * (h / 3.0);
  };

  auto refine = [&](double a, double b, double agree_tol) {
    long n = 64;
    Complex prev = simpson(a, b, n);
    for (int iter = 0; iter < 18; ++iter) {
      n *= 2;
      Complex cur = simpson(a, b, n);
      if (std::abs(cur - prev) < agree_tol) return cur;
      prev = cur;
    }
    throw ConvergenceError("oracle Simpson refinement budget exhausted");
  };

  if (f.decay == DecayClass::bounded_oscillatory) {
    // Cell sums with the plain alternating-series tail bound.
    if (f.osc_period <= 0.0)
      throw DomainError("bounded_oscillatory integrand needs osc_period > 0");
    Complex total{};
    const long max_cells = 200000;
    for (long k = 0; k < max_cells; ++k) {
      const double a = lower + static_cast<double>(k) * f.osc_period;
      Complex cell = refine(a, a + f.osc_period, kAgreeTol * 0.1);
      total += cell;
      if (k > 4 && std::abs(cell) < kAgreeTol) return total;
    }
    throw ConvergenceError("oracle cell sum did not converge");
  }

  detail::TailEnvelope env = envelope_of(f);
  auto bound = [&env](double x) { return detail::tail_bound(env, x); };
  const double cut =
      detail::find_cutoff(bound, kTailTarget, detail::tail_bound_start(env, lower)) *
      cfg.tail_cutoff_factor;
  return refine(lower, cut, kAgreeTol);
}

}  // namespace gfn
