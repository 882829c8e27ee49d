#pragma once

namespace gfn {

/// Dawson integral F(x) = exp(-x^2) int_0^x exp(t^2) dt.
/// Power series below |x| = 6, asymptotic series above; accurate to ~1e-14.
double dawson(double x);

}  // namespace gfn
