#pragma once

#include <functional>

#include "gfn/types.hpp"

namespace gfn {

/// How the integrand behaves as the abscissa grows. The engine uses the
/// declared class to derive an auditable truncation bound for the tail.
enum class DecayClass {
  gaussian_tail,       // |f(x)| <= amplitude * x^poly_degree * exp(-rate x^2)
  exponential_tail,    // |f(x)| <= amplitude * x^poly_degree * exp(-rate x)
  bounded_oscillatory  // sign-alternating cells of length osc_period,
                       // amplitude bounded and (at least algebraically) decaying
};

enum class OscillationPolicy { none, cell_sum_accelerated };

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  double split_point = 1.0;        // where g_m switches representations
  double tail_cutoff_factor = 1.0; // scales the truncation point (audit knob)
  OscillationPolicy oscillation_policy = OscillationPolicy::cell_sum_accelerated;
};

/// Complex-valued integrand on a semi-infinite interval together with its
/// declared decay envelope.
struct Integrand {
  std::function<Complex(double)> eval;
  DecayClass decay = DecayClass::exponential_tail;
  double rate = 1.0;
  double amplitude = 1.0;
  double poly_degree = 0.0;
  double osc_period = 0.0;  // cell length, bounded_oscillatory only
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [lower, inf).
/// Deterministic for fixed inputs. Throws DomainError on non-finite
/// samples, ConvergenceError when the subdivision budget runs out.
EvalResult integrate_semi_infinite(const Integrand& f, double lower,
                                   const QuadratureConfig& cfg);

/// Brute-force composite-Simpson reference integrator. Shares no panel
/// logic with the engine; intentionally slow. Step-halving continues until
/// two successive refinements agree to 1e-12 absolute. Used for golden
/// values and cross-checks only.
Complex oracle_integrate(const Integrand& f, double lower,
                         const QuadratureConfig& cfg);

}  // namespace gfn
