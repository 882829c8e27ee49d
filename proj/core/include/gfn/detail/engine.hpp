#pragma once

// Adaptive Gauss-Kronrod 7/15 engine, templated on the value type so the
// real-axis short circuit can run in pure double arithmetic. Everything in
// this header is deterministic: panel selection scans linearly and breaks
// ties toward the leftmost interval.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gfn/errors.hpp"
#include "gfn/quadrature.hpp"

namespace gfn::detail {

// QUADPACK qk15 abscissae (positive half) and weights.
inline constexpr double kGk15Nodes[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
inline constexpr double kGk15Weights[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
// 7-point Gauss weights for nodes 1, 3, 5 and the centre.
inline constexpr double kG7Weights[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776};

inline double abs_val(double x) { return std::abs(x); }
inline double abs_val(const std::complex<double>& x) { return std::abs(x); }

inline bool finite_val(double x) { return std::isfinite(x); }
inline bool finite_val(const std::complex<double>& x) {
  return std::isfinite(x.real()) && std::isfinite(x.imag());
}

template <class T>
struct Outcome {
  T integral{};
  double error = 0.0;
  int subdivisions = 1;
};

template <class T, class F>
void gk15_panel(F&& f, double a, double b, T& integral, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  if (!finite_val(fc)) throw DomainError("non-finite integrand sample at x = " + std::to_string(c));
  T sum15 = kGk15Weights[7] * fc;
  T sum7 = kG7Weights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = kGk15Nodes[i] * h;
    T f1 = f(c - dx);
    T f2 = f(c + dx);
    if (!finite_val(f1) || !finite_val(f2))
      throw DomainError("non-finite integrand sample near x = " + std::to_string(c));
    sum15 += kGk15Weights[i] * (f1 + f2);
    if (i % 2 == 1) sum7 += kG7Weights[(i - 1) / 2] * (f1 + f2);
  }
  integral = sum15 * h;
  err = abs_val((sum15 - sum7) * h);
}

// Adaptive bisection over a finite interval. Large ranges are pre-split
// geometrically so exponential-scale integrands start with sane panels.
template <class T, class F>
Outcome<T> integrate_adaptive(F&& f, double a, double b, double abs_tol,
                              double rel_tol, int max_subdivisions) {
  Outcome<T> out;
  if (!(b > a)) return out;

  struct Panel {
    double a, b;
    T integral;
    double err;
  };
  std::vector<double> pts{a};
  double w = std::min(1.0, (b - a) / 4.0);
  double x = a + w;
  while (x < b && pts.size() < 64) {
    pts.push_back(x);
    w *= 2.0;
    x = pts.back() + w;
  }
  pts.push_back(b);

  std::vector<Panel> panels;
  panels.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Panel p{pts[i], pts[i + 1], T{}, 0.0};
    gk15_panel(f, p.a, p.b, p.integral, p.err);
    panels.push_back(p);
  }
  int subdivisions = static_cast<int>(panels.size());

  for (;;) {
    T total{};
    double errsum = 0.0;
    for (const Panel& p : panels) {
      total += p.integral;
      errsum += p.err;
    }
    const double target = abs_tol + rel_tol * abs_val(total);
    if (errsum <= target) {
      out.integral = total;
      out.error = errsum;
      out.subdivisions = subdivisions;
      return out;
    }
    if (subdivisions >= max_subdivisions)
      throw ConvergenceError("subdivision budget exhausted (error " +
                             std::to_string(errsum) + " > target " +
                             std::to_string(target) + ")");
    std::size_t wi = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].err > panels[wi].err) wi = i;
    Panel worst = panels[wi];
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw ConvergenceError("panel width underflow at x = " + std::to_string(worst.a));
    Panel left{worst.a, mid, T{}, 0.0};
    Panel right{mid, worst.b, T{}, 0.0};
    gk15_panel(f, left.a, left.b, left.integral, left.err);
    gk15_panel(f, right.a, right.b, right.integral, right.err);
    panels[wi] = left;
    panels.push_back(right);
    ++subdivisions;
  }
}

// Iterated Aitken delta-squared on the trailing window of partial sums.
template <class T>
T aitken_accelerate(const std::vector<T>& sums) {
  const std::size_t window = 40;
  std::size_t begin = sums.size() > window ? sums.size() - window : 0;
  std::vector<T> v(sums.begin() + static_cast<std::ptrdiff_t>(begin), sums.end());
  while (v.size() >= 3) {
    std::vector<T> next;
    next.reserve(v.size() - 2);
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
      T d1 = v[i + 1] - v[i];
      T d2 = v[i + 2] - 2.0 * v[i + 1] + v[i];
      if (abs_val(d2) < 1e-300)
        next.push_back(v[i + 2]);
      else
        next.push_back(v[i + 2] - (v[i + 2] - v[i + 1]) * (v[i + 2] - v[i + 1]) / d2);
    }
    v = std::move(next);
  }
  return v.back();
}

// Cell-by-cell summation between consecutive oscillation zeros, with the
// cell sums accelerated as an alternating series.
template <class T, class F>
Outcome<T> integrate_cells(F&& f, double lower, double period, double abs_tol,
                           double rel_tol, int max_subdivisions) {
  std::vector<T> partial;
  T running{};
  double quad_err = 0.0;
  int subdivisions = 0;
  T prev_acc{};
  bool have_prev = false;
  int stable = 0;
  const int max_cells = std::max(64, max_subdivisions);

  for (int k = 0; k < max_cells; ++k) {
    const double a = lower + k * period;
    const double b = a + period;
    Outcome<T> cell =
        integrate_adaptive<T>(f, a, b, abs_tol * 1e-2, rel_tol * 1e-2, 200);
    subdivisions += cell.subdivisions;
    quad_err += cell.error;
    running += cell.integral;
    partial.push_back(running);
    if (k < 8) continue;
    T acc = aitken_accelerate(partial);
    if (have_prev) {
      const double diff = abs_val(acc - prev_acc);
      const double target = abs_tol + rel_tol * abs_val(acc);
      stable = diff <= 0.5 * target ? stable + 1 : 0;
      if (stable >= 2) {
        Outcome<T> out;
        out.integral = acc;
        out.error = diff + quad_err;
        out.subdivisions = std::max(subdivisions, 1);
        return out;
      }
    }
    prev_acc = acc;
    have_prev = true;
  }
  throw ConvergenceError("oscillatory cell sum did not stabilise within " +
                         std::to_string(max_cells) + " cells");
}

// Smallest X (scanned upward by factors of 1.5) where the declared tail
// bound drops below target.
inline double find_cutoff(const std::function<double(double)>& bound,
                          double target, double xmin) {
  double x = std::max(xmin, 1.0);
  for (int i = 0; i < 240; ++i) {
    if (bound(x) < target) return x;
    x *= 1.5;
  }
  throw ConvergenceError("tail bound never reaches the truncation target");
}

struct TailEnvelope {
  double exp_rate = 0.0;    // envelope carries exp(-exp_rate * x); 0 = none
  double gauss_rate = 0.0;  // envelope carries exp(-gauss_rate * x^2); 0 = none
  double poly_degree = 0.0; // envelope carries x^poly_degree
  double amplitude = 1.0;
  double osc_freq = 0.0;    // zero-crossing frequency; cells have length pi/osc_freq
};

inline double tail_bound(const TailEnvelope& e, double x) {
  double best = std::numeric_limits<double>::infinity();
  if (e.gauss_rate > 0.0) {
    double b = e.amplitude * std::pow(x, e.poly_degree) *
               std::exp(-e.gauss_rate * x * x) / (2.0 * e.gauss_rate * x);
    best = std::min(best, b);
  }
  if (e.exp_rate > 0.0) {
    double b = e.amplitude * std::pow(x, e.poly_degree) *
               std::exp(-e.exp_rate * x) * 2.0 / e.exp_rate;
    best = std::min(best, b);
  }
  if (e.poly_degree < -1.0 && e.gauss_rate == 0.0) {
    double b = e.amplitude * std::pow(x, e.poly_degree + 1.0) / (-e.poly_degree - 1.0);
    best = std::min(best, b);
  }
  return best;
}

inline double tail_bound_start(const TailEnvelope& e, double from) {
  double x = std::max(from, 1.0);
  if (e.exp_rate > 0.0 && e.poly_degree > 0.0)
    x = std::max(x, 2.0 * e.poly_degree / e.exp_rate);
  if (e.gauss_rate > 0.0)
    x = std::max(x, std::sqrt((std::abs(e.poly_degree) + 2.0) / (2.0 * e.gauss_rate)));
  return x;
}

// Integrate f over [from, inf) given its declared envelope. Chooses between
// truncated adaptive panels and the oscillatory cell sum; the truncated tail
// is charged to the error estimate via the envelope bound.
template <class T, class F>
Outcome<T> tail_integrate(F&& f, double from, const TailEnvelope& env,
                          const QuadratureConfig& cfg) {
  const double target = cfg.abs_tol * 1e-3;
  const bool truncatable =
      env.exp_rate > 0.0 || env.gauss_rate > 0.0 || env.poly_degree < -1.0;
  auto bound = [&env](double x) { return tail_bound(env, x); };

  if (env.osc_freq > 0.0 &&
      cfg.oscillation_policy == OscillationPolicy::cell_sum_accelerated) {
    bool cells = !truncatable;
    if (!cells) {
      const double cut = find_cutoff(bound, target, tail_bound_start(env, from));
      cells = cut * env.osc_freq / M_PI > 500.0 || cut > 5000.0;
    }
    if (cells)
      return integrate_cells<T>(f, from, M_PI / env.osc_freq, cfg.abs_tol,
                                cfg.rel_tol, cfg.max_subdivisions);
  }
  if (!truncatable)
    throw DomainError("integrand tail admits no truncation bound");
  double cut = find_cutoff(bound, target, tail_bound_start(env, from)) *
               cfg.tail_cutoff_factor;
  if (cut <= from) cut = from + 1.0;
  Outcome<T> out = integrate_adaptive<T>(f, from, cut, cfg.abs_tol, cfg.rel_tol,
                                         cfg.max_subdivisions);
  out.error += bound(cut);
  return out;
}

}  // namespace gfn::detail
