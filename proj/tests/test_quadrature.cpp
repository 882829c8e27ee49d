#include <doctest.h>

#include <cmath>
#include <random>

#include "gfn/errors.hpp"
#include "gfn/quadrature.hpp"

using gfn::Complex;
using gfn::DecayClass;
using gfn::Integrand;
using gfn::QuadratureConfig;

namespace {

const QuadratureConfig cfg{};

Integrand gaussian() {
  Integrand f;
  f.eval = [](double x) -> Complex { return {std::exp(-x * x), 0.0}; };
  f.decay = DecayClass::gaussian_tail;
  f.rate = 1.0;
  return f;
}

Integrand exp_decay(double rate) {
  Integrand f;
  f.eval = [rate](double x) -> Complex {
    return {x * std::exp(-rate * x), 0.0};
  };
  f.decay = DecayClass::exponential_tail;
  f.rate = rate;
  f.poly_degree = 1.0;
  return f;
}

Integrand osc_example() {
  // exp(-1/x^2) cos(3x) / x^3: the oscillatory-boundary shape of the
  // substituted g-representation at Re z = 0.
  Integrand f;
  f.eval = [](double x) -> Complex {
    if (x < 1e-8) return {0.0, 0.0};
    const double e = -1.0 / (x * x) - 3.0 * std::log(x);
    if (e < -745.0) return {0.0, 0.0};
    return {std::exp(e) * std::cos(3.0 * x), 0.0};
  };
  f.decay = DecayClass::bounded_oscillatory;
  f.osc_period = M_PI / 3.0;
  return f;
}

}  // namespace

TEST_CASE("gaussian integrates to sqrt(pi)/2") {
  const auto r = gfn::integrate_semi_infinite(gaussian(), 0.0, cfg);
  CHECK(std::abs(r.value.real() - std::sqrt(M_PI) / 2.0) < 1e-12);
  CHECK(r.value.imag() == 0.0);
  CHECK(r.abs_error_estimate < 1e-10);
}

TEST_CASE("x exp(-x) integrates to 1") {
  const auto r = gfn::integrate_semi_infinite(exp_decay(1.0), 0.0, cfg);
  CHECK(std::abs(r.value.real() - 1.0) < 1e-12);
}

TEST_CASE("x^5 exp(-x^2) integrates to 1") {
  Integrand f;
  f.eval = [](double x) -> Complex {
    return {std::pow(x, 5) * std::exp(-x * x), 0.0};
  };
  f.decay = DecayClass::gaussian_tail;
  f.rate = 1.0;
  f.poly_degree = 5.0;
  const auto r = gfn::integrate_semi_infinite(f, 0.0, cfg);
  CHECK(std::abs(r.value.real() - 1.0) < 1e-11);
}

TEST_CASE("oscillatory cell summation matches frozen oracle value") {
  // Frozen: int_0^inf exp(-1/x^2) cos(3x)/x^3 dx.
  const double expected = -0.17099775685815469;
  const auto r = gfn::integrate_semi_infinite(osc_example(), 0.0, cfg);
  CHECK(std::abs(r.value.real() - expected) < 1e-10);
}

TEST_CASE("oscillatory integrand without a cell policy is rejected") {
  QuadratureConfig c = cfg;
  c.oscillation_policy = gfn::OscillationPolicy::none;
  CHECK_THROWS_AS(gfn::integrate_semi_infinite(osc_example(), 0.0, c),
                  gfn::DomainError);
}

TEST_CASE("linearity over random coefficients") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = coef(rng), b = coef(rng);
    Integrand f;
    f.eval = [a, b](double x) -> Complex {
      return {a * std::exp(-x) + b * std::exp(-2.0 * x), 0.0};
    };
    f.decay = DecayClass::exponential_tail;
    f.rate = 1.0;
    f.amplitude = std::abs(a) + std::abs(b);
    const auto r = gfn::integrate_semi_infinite(f, 0.0, cfg);
    CHECK(std::abs(r.value.real() - (a + b / 2.0)) < 1e-10 * (1.0 + std::abs(a) + std::abs(b)));
  }
}

TEST_CASE("repeated evaluation is bit-identical") {
  const auto r1 = gfn::integrate_semi_infinite(exp_decay(0.7), 0.0, cfg);
  const auto r2 = gfn::integrate_semi_infinite(exp_decay(0.7), 0.0, cfg);
  CHECK(r1.value.real() == r2.value.real());
  CHECK(r1.value.imag() == r2.value.imag());
  CHECK(r1.abs_error_estimate == r2.abs_error_estimate);
  CHECK(r1.subdivisions_used == r2.subdivisions_used);
}

TEST_CASE("truncation bound is sound: doubling the cutoff moves the result less than the estimate") {
  QuadratureConfig longer = cfg;
  longer.tail_cutoff_factor = 2.0;
  const auto a = gfn::integrate_semi_infinite(exp_decay(1.0), 0.0, cfg);
  const auto b = gfn::integrate_semi_infinite(exp_decay(1.0), 0.0, longer);
  CHECK(std::abs(a.value.real() - b.value.real()) <=
        a.abs_error_estimate + b.abs_error_estimate + 1e-15);
}

TEST_CASE("error estimate covers the true error on known integrals") {
  const auto r = gfn::integrate_semi_infinite(gaussian(), 0.0, cfg);
  CHECK(std::abs(r.value.real() - std::sqrt(M_PI) / 2.0) <=
        r.abs_error_estimate + 1e-15);
}

TEST_CASE("non-finite integrand sample raises DomainError") {
  Integrand f;
  f.eval = [](double x) -> Complex {
    return {x < 0.5 ? 0.0 : std::numeric_limits<double>::quiet_NaN(), 0.0};
  };
  f.decay = DecayClass::exponential_tail;
  f.rate = 1.0;
  CHECK_THROWS_AS(gfn::integrate_semi_infinite(f, 0.0, cfg), gfn::DomainError);
}

TEST_CASE("exhausted subdivision budget raises ConvergenceError") {
  Integrand f;
  f.eval = [](double x) -> Complex {
    return {std::exp(-x) * std::cos(50.0 * x), 0.0};
  };
  f.decay = DecayClass::exponential_tail;
  f.rate = 1.0;
  QuadratureConfig tiny = cfg;
  tiny.max_subdivisions = 3;
  CHECK_THROWS_AS(gfn::integrate_semi_infinite(f, 0.0, tiny),
                  gfn::ConvergenceError);
}

TEST_CASE("engine agrees with the brute-force oracle") {
  for (const double rate : {0.5, 1.0, 3.0}) {
    const Integrand f = exp_decay(rate);
    const auto fast = gfn::integrate_semi_infinite(f, 0.0, cfg);
    const Complex slow = gfn::oracle_integrate(f, 0.0, cfg);
    CHECK(std::abs(fast.value - slow) < 1e-11);
  }
}

TEST_CASE("oracle handles the oscillatory class as well") {
  const Complex slow = gfn::oracle_integrate(osc_example(), 0.0, cfg);
  CHECK(std::abs(slow.real() - (-0.17099775685815469)) < 1e-11);
}
