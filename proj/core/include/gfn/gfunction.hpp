#pragma once

#include <utility>

#include "gfn/quadrature.hpp"
#include "gfn/types.hpp"

namespace gfn {

/// Largest supported order of the g-function family.
inline constexpr int kMaxOrder = 20;

/// g_m(z) = int_0^inf y^m exp(-y^2 - z/y) dy, Re z >= 0, 0 <= m <= kMaxOrder.
///
/// The integral is split at cfg.split_point: the outer piece is integrated
/// directly under its Gaussian envelope, the inner piece is mapped by
/// y -> 1/x onto [1/split, inf) where the essential singularity becomes a
/// smooth exp(-Re z * x) tail. Purely real z takes a real-arithmetic path,
/// so Im of the result is exactly zero on the real axis.
EvalResult g(int m, Complex z, const QuadratureConfig& cfg);

/// Same function through the substituted representation
/// g_m(z) = int_0^inf exp(-1/x^2 - z x) / x^{m+2} dx, evaluated over the
/// whole half-line. Kept as an independent numerical route.
EvalResult g_inverse_form(int m, Complex z, const QuadratureConfig& cfg);

/// Closed form at the origin: g_m(0) = Gamma((m+1)/2) / 2, built from
/// Gamma(1/2) = sqrt(pi) and the factorial recursion. For odd orders this
/// reduces to g_{2n+1}(0) = n!/2.
double g_gamma_special(int m);

/// phi_m(x) = int_0^inf y^m exp(-y - x/sqrt(y)) dy for x >= 0, evaluated
/// through the substitution y = w^2 which gives phi_m(x) = 2 g_{2m+1}(x).
EvalResult phi(int m, double x, const QuadratureConfig& cfg);

/// n-th derivative d^n g_m / dz^n =
/// (-1)^n int_0^inf exp(-1/x^2 - z x) / x^{m-n+2} dx.
/// For n <= m this equals (-1)^n g_{m-n}(z) and is evaluated that way.
/// For n > m the integral converges only for Re z > 0.
EvalResult g_derivative(int m, Complex z, int n, const QuadratureConfig& cfg);

/// Real and imaginary parts of g_m(r e^{-i theta}) by direct quadrature of
/// the two real integrands
///   Re: y^m exp(-y^2 - r cos(theta)/y) cos(r sin(theta)/y)
///   Im: y^m exp(-y^2 - r cos(theta)/y) sin(r sin(theta)/y).
/// With z = r e^{-i theta} we have exp(-z/y) =
/// exp(-r cos(theta)/y) * exp(+i r sin(theta)/y), so the imaginary
/// integrand carries +sin and the pair matches the complex evaluation
/// componentwise (no sign flip).
std::pair<double, double> g_polar_parts(int m, const PolarArg& arg,
                                        const QuadratureConfig& cfg);

/// |2 g_m(z) - (m-1) g_{m-2}(z) - z g_{m-3}(z)|, m >= 3. Diagnostic; small
/// up to the summed quadrature error estimates.
double recurrence_residual(int m, Complex z, const QuadratureConfig& cfg);

/// |x g_m''' - (m-1) g_m'' + 2 g_m| at real x > 0, derivatives taken through
/// g_derivative. For m >= 3 this is algebraically the recurrence residual.
double ode_residual(int m, double x, const QuadratureConfig& cfg);

/// Order-m Taylor polynomial of g_m about z = 0:
/// T_m(z) = sum_{k=0..m} (-z)^k / k! * g_{m-k}(0).
/// An approximation for small |z|, not an evaluation path; the expansion
/// terminates because d^n g_m diverges at the origin for n > m.
Complex taylor_truncated(int m, Complex z);

}  // namespace gfn
