#include "gfn/dawson.hpp"

#include <cmath>

namespace gfn {

double dawson(double x) {
  const double ax = std::abs(x);
  if (ax == 0.0) return x;
  if (ax < 6.0) {
    // erfi-style series: int_0^x e^{t^2} dt = sum x^{2k+1} / (k! (2k+1)).
    // All terms positive, so no cancellation before the e^{-x^2} factor.
    const double x2 = ax * ax;
    double term = ax;  // x^{2k+1} / k!
    double sum = term;
    for (int k = 1; k < 400; ++k) {
      term *= x2 / static_cast<double>(k);
      const double add = term / static_cast<double>(2 * k + 1);
      sum += add;
      if (add < sum * 1e-18) break;
    }
    const double v = std::exp(-x2) * sum;
    return x < 0.0 ? -v : v;
  }
  // F(x) ~ 1/(2x) sum_k (2k-1)!! / (2x^2)^k, truncated at the smallest term.
  const double inv2x2 = 1.0 / (2.0 * ax * ax);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double next = term * static_cast<double>(2 * k - 1) * inv2x2;
    if (next >= term) break;  // asymptotic series started diverging
    term = next;
    sum += term;
    if (term < sum * 1e-18) break;
  }
  const double v = sum / (2.0 * ax);
  return x < 0.0 ? -v : v;
}

}  // namespace gfn
