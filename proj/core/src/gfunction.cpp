#include "gfn/gfunction.hpp"

#include <cmath>
#include <string>

#include "gfn/detail/engine.hpp"
#include "gfn/errors.hpp"

namespace gfn {

namespace {

constexpr double kExpUnderflow = -745.0;

void check_order(int m) {
  if (m < 0 || m > kMaxOrder)
    throw DomainError("order m = " + std::to_string(m) + " outside [0, " +
                      std::to_string(kMaxOrder) + "]");
}

void check_argument(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("non-finite argument z");
  if (z.real() < 0.0)
    throw DomainError("Re z = " + std::to_string(z.real()) +
                      " < 0: the defining integral diverges at y -> 0");
}

// exp(-1/x^2 - z x) / x^p, safe under both underflow directions.
Complex inverse_integrand(double x, Complex z, double p) {
  if (x < 1e-8) return {0.0, 0.0};
  const double re = -1.0 / (x * x) - z.real() * x - p * std::log(x);
  if (re < kExpUnderflow) return {0.0, 0.0};
  return std::exp(Complex(re, -z.imag() * x));
}

double inverse_integrand_real(double x, double zr, double p) {
  if (x < 1e-8) return 0.0;
  const double re = -1.0 / (x * x) - zr * x - p * std::log(x);
  return re < kExpUnderflow ? 0.0 : std::exp(re);
}

// y^m exp(-y^2 - z/y), y > 0.
Complex direct_integrand(double y, Complex z, int m) {
  const double re = m * std::log(y) - y * y - z.real() / y;
  if (re < kExpUnderflow) return {0.0, 0.0};
  return std::exp(Complex(re, -z.imag() / y));
}

double direct_integrand_real(double y, double zr, int m) {
  const double re = m * std::log(y) - y * y - zr / y;
  return re < kExpUnderflow ? 0.0 : std::exp(re);
}

EvalResult combine(const detail::Outcome<Complex>& a,
                   const detail::Outcome<Complex>& b) {
  return {a.integral + b.integral, a.error + b.error,
          std::max(a.subdivisions + b.subdivisions, 1)};
}

EvalResult combine_real(const detail::Outcome<double>& a,
                        const detail::Outcome<double>& b) {
  return {Complex(a.integral + b.integral, 0.0), a.error + b.error,
          std::max(a.subdivisions + b.subdivisions, 1)};
}

// Envelope of exp(-1/x^2 - Re z * x) / x^p on [1, inf).
detail::TailEnvelope inverse_envelope(Complex z, double p) {
  detail::TailEnvelope env;
  env.exp_rate = z.real();
  env.poly_degree = -p;
  env.osc_freq = std::abs(z.imag());
  return env;
}

// Outer piece of the direct representation: y in [split, cutoff].
template <class T, class F>
detail::Outcome<T> direct_outer(F&& f, int m, const QuadratureConfig& cfg) {
  detail::TailEnvelope env;
  env.gauss_rate = 1.0;
  env.poly_degree = m;
  return detail::tail_integrate<T>(f, cfg.split_point, env, cfg);
}

EvalResult g_real_axis(int m, double x, const QuadratureConfig& cfg) {
  auto fu = [x, m](double y) { return direct_integrand_real(y, x, m); };
  detail::Outcome<double> upper = direct_outer<double>(fu, m, cfg);
  detail::Outcome<double> lower;
  if (x == 0.0) {
    // No singular factor at all: integrate y^m e^{-y^2} directly.
    auto f0 = [m](double y) {
      return y == 0.0 ? (m == 0 ? 1.0 : 0.0) : std::exp(m * std::log(y) - y * y);
    };
    lower = detail::integrate_adaptive<double>(f0, 0.0, cfg.split_point,
                                               cfg.abs_tol, cfg.rel_tol,
                                               cfg.max_subdivisions);
  } else {
    const double p = m + 2.0;
    auto fl = [x, p](double t) { return inverse_integrand_real(t, x, p); };
    lower = detail::tail_integrate<double>(fl, 1.0 / cfg.split_point,
                                           inverse_envelope(Complex(x, 0.0), p),
                                           cfg);
  }
  return combine_real(upper, lower);
}

}  // namespace

EvalResult g(int m, Complex z, const QuadratureConfig& cfg) {
  check_order(m);
  check_argument(z);
  if (z.imag() == 0.0) return g_real_axis(m, z.real(), cfg);

  auto fu = [z, m](double y) { return direct_integrand(y, z, m); };
  detail::Outcome<Complex> upper = direct_outer<Complex>(fu, m, cfg);

  const double p = m + 2.0;
  auto fl = [z, p](double x) { return inverse_integrand(x, z, p); };
  detail::Outcome<Complex> lower = detail::tail_integrate<Complex>(
      fl, 1.0 / cfg.split_point, inverse_envelope(z, p), cfg);
  return combine(upper, lower);
}

EvalResult g_inverse_form(int m, Complex z, const QuadratureConfig& cfg) {
  check_order(m);
  check_argument(z);
  const double p = m + 2.0;
  if (z.imag() == 0.0) {
    const double zr = z.real();
    auto f = [zr, p](double x) { return inverse_integrand_real(x, zr, p); };
    detail::Outcome<double> head = detail::integrate_adaptive<double>(
        f, 0.0, 1.0, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
    detail::Outcome<double> tail =
        detail::tail_integrate<double>(f, 1.0, inverse_envelope(z, p), cfg);
    return combine_real(head, tail);
  }
  auto f = [z, p](double x) { return inverse_integrand(x, z, p); };
  detail::Outcome<Complex> head = detail::integrate_adaptive<Complex>(
      f, 0.0, 1.0, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
  detail::Outcome<Complex> tail =
      detail::tail_integrate<Complex>(f, 1.0, inverse_envelope(z, p), cfg);
  return combine(head, tail);
}

double g_gamma_special(int m) {
  check_order(m);
  if (m % 2 == 1) {
    // Gamma at an integer: g_{2n+1}(0) = n!/2 with n = (m-1)/2.
    const int n = (m - 1) / 2;
    double v = 1.0;
    for (int i = 2; i <= n; ++i) v *= i;
    return 0.5 * v;
  }
  // Gamma at a half-integer: Gamma(k + 1/2) from Gamma(1/2) = sqrt(pi).
  const int k = m / 2;
  double v = std::sqrt(M_PI);
  for (int i = 1; i <= k; ++i) v *= (i - 0.5);
  return 0.5 * v;
}

EvalResult phi(int m, double x, const QuadratureConfig& cfg) {
  if (m < 0 || 2 * m + 1 > kMaxOrder)
    throw DomainError("phi order m = " + std::to_string(m) +
                      " maps to g-order 2m+1 > " + std::to_string(kMaxOrder));
  if (!(x >= 0.0) || !std::isfinite(x))
    throw DomainError("phi requires finite x >= 0");
  // y = w^2 turns int y^m e^{-y - x/sqrt(y)} dy into 2 int w^{2m+1} e^{-w^2 - x/w} dw.
  EvalResult r = g(2 * m + 1, Complex(x, 0.0), cfg);
  return {2.0 * r.value, 2.0 * r.abs_error_estimate, r.subdivisions_used};
}

EvalResult g_derivative(int m, Complex z, int n, const QuadratureConfig& cfg) {
  check_order(m);
  if (n < 1) throw DomainError("derivative order n must be >= 1");
  check_argument(z);
  const double sign = (n % 2 == 1) ? -1.0 : 1.0;
  if (n <= m) {
    EvalResult r = g(m - n, z, cfg);
    r.value *= sign;
    return r;
  }
  if (z.real() == 0.0)
    throw DomainError("d^n g_m diverges at Re z = 0 for n > m");
  const double p = m - n + 2.0;
  if (z.imag() == 0.0) {
    const double zr = z.real();
    auto f = [zr, p](double x) { return inverse_integrand_real(x, zr, p); };
    detail::Outcome<double> head = detail::integrate_adaptive<double>(
        f, 0.0, 1.0, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
    detail::Outcome<double> tail =
        detail::tail_integrate<double>(f, 1.0, inverse_envelope(z, p), cfg);
    EvalResult r = combine_real(head, tail);
    r.value *= sign;
    return r;
  }
  auto f = [z, p](double x) { return inverse_integrand(x, z, p); };
  detail::Outcome<Complex> head = detail::integrate_adaptive<Complex>(
      f, 0.0, 1.0, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
  detail::Outcome<Complex> tail =
      detail::tail_integrate<Complex>(f, 1.0, inverse_envelope(z, p), cfg);
  EvalResult r = combine(head, tail);
  r.value *= sign;
  return r;
}

std::pair<double, double> g_polar_parts(int m, const PolarArg& arg,
                                        const QuadratureConfig& cfg) {
  check_order(m);
  if (!(arg.r >= 0.0) || !std::isfinite(arg.r))
    throw DomainError("polar modulus r must be finite and >= 0");
  if (!(arg.theta >= 0.0 && arg.theta <= M_PI / 2.0))
    throw DomainError("polar angle theta must lie in [0, pi/2]");
  const double a = arg.r * std::cos(arg.theta);
  const double b = arg.r * std::sin(arg.theta);
  const double p = m + 2.0;

  auto upper = [&](auto osc) {
    auto f = [a, b, m, osc](double y) {
      const double e = m * std::log(y) - y * y - a / y;
      return e < kExpUnderflow ? 0.0 : std::exp(e) * osc(b / y);
    };
    return direct_outer<double>(f, m, cfg);
  };
  auto lower = [&](auto osc) {
    auto f = [a, b, p, osc](double x) {
      if (x < 1e-8) return 0.0;
      const double e = -1.0 / (x * x) - a * x - p * std::log(x);
      return e < kExpUnderflow ? 0.0 : std::exp(e) * osc(b * x);
    };
    detail::TailEnvelope env = inverse_envelope(Complex(a, -b), p);
    return detail::tail_integrate<double>(f, 1.0 / cfg.split_point, env, cfg);
  };

  auto cosf = [](double t) { return std::cos(t); };
  const double re = upper(cosf).integral + lower(cosf).integral;
  if (b == 0.0) return {re, 0.0};  // sin factor vanishes identically
  auto sinf = [](double t) { return std::sin(t); };
  const double im = upper(sinf).integral + lower(sinf).integral;
  return {re, im};
}

double recurrence_residual(int m, Complex z, const QuadratureConfig& cfg) {
  if (m < 3) throw DomainError("recurrence needs m >= 3");
  check_argument(z);
  const Complex gm = g(m, z, cfg).value;
  const Complex gm2 = g(m - 2, z, cfg).value;
  const Complex gm3 = g(m - 3, z, cfg).value;
  return std::abs(2.0 * gm - static_cast<double>(m - 1) * gm2 - z * gm3);
}

double ode_residual(int m, double x, const QuadratureConfig& cfg) {
  check_order(m);
  if (!(x > 0.0)) throw DomainError("ODE residual requires x > 0");
  const Complex z(x, 0.0);
  const Complex d3 = g_derivative(m, z, 3, cfg).value;
  const Complex d2 = g_derivative(m, z, 2, cfg).value;
  const Complex g0 = g(m, z, cfg).value;
  return std::abs(x * d3 - static_cast<double>(m - 1) * d2 + 2.0 * g0);
}

Complex taylor_truncated(int m, Complex z) {
  check_order(m);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("non-finite argument z");
  Complex sum{};
  Complex pow{1.0, 0.0};
  double kfact = 1.0;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) {
      pow *= -z;
      kfact *= k;
    }
    sum += pow / kfact * g_gamma_special(m - k);
  }
  return sum;
}

}  // namespace gfn
