#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "detana/errors.hpp"

namespace detana {

/// Fixed-size state vector for the embedded Runge-Kutta driver.
template <class T, std::size_t N>
struct SmallVec {
  std::array<T, N> v{};

  T& operator[](std::size_t i) { return v[i]; }
  const T& operator[](std::size_t i) const { return v[i]; }

  SmallVec& operator+=(const SmallVec& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
    return *this;
  }
  friend SmallVec operator+(SmallVec a, const SmallVec& b) { return a += b; }
  friend SmallVec operator*(double s, SmallVec a) {
    for (std::size_t i = 0; i < N; ++i) a.v[i] *= s;
    return a;
  }
};

template <class T>
double component_abs(const T& x) {
  return std::abs(x);
}

template <class T, std::size_t N>
double max_abs(const SmallVec<T, N>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) m = std::max(m, component_abs(a.v[i]));
  return m;
}

struct OdeOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  double h_init = 0.0;     // 0: pick from the interval length
  double h_min_factor = 1e-14;  // h_min = factor * |x1 - x0|
  long max_steps = 2000000;
};

/// Adaptive Cash-Karp 4(5) integration of dy/dx = f(x, y) from x0 to x1
/// (either direction). Calls observer(x, y) at x0 and after every accepted
/// step. Throws NumericsError on step-size underflow or step budget overrun.
template <class State, class F, class Observer>
void integrate_rk45(F f, double x0, double x1, State& y, const OdeOptions& opt,
                    Observer observer) {
  static constexpr double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
  static constexpr double b21 = 0.2;
  static constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
  static constexpr double b41 = 0.3, b42 = -0.9, b43 = 1.2;
  static constexpr double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0,
                          b54 = 35.0 / 27.0;
  static constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0,
                          b63 = 575.0 / 13824.0, b64 = 44275.0 / 110592.0,
                          b65 = 253.0 / 4096.0;
  static constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0,
                          c4 = 125.0 / 594.0, c6 = 512.0 / 1771.0;
  static constexpr double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                          d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0,
                          d6 = c6 - 0.25;

  if (x0 == x1) {
    observer(x0, y);
    return;
  }
  const double dir = (x1 > x0) ? 1.0 : -1.0;
  const double span = std::abs(x1 - x0);
  const double h_min = opt.h_min_factor * span;
  double h = (opt.h_init > 0.0) ? opt.h_init : span / 64.0;
  double x = x0;
  observer(x, y);

  for (long step = 0; step < opt.max_steps; ++step) {
    if (dir * (x - x1) >= 0.0) return;
    h = std::min(h, std::abs(x1 - x));
    const double hs = dir * h;

    const State k1 = f(x, y);
    const State k2 = f(x + a2 * hs, y + (hs * b21) * k1);
    const State k3 = f(x + a3 * hs, y + (hs * b31) * k1 + (hs * b32) * k2);
    const State k4 =
        f(x + a4 * hs, y + (hs * b41) * k1 + (hs * b42) * k2 + (hs * b43) * k3);
    const State k5 = f(x + a5 * hs, y + (hs * b51) * k1 + (hs * b52) * k2 +
                                        (hs * b53) * k3 + (hs * b54) * k4);
    const State k6 =
        f(x + a6 * hs, y + (hs * b61) * k1 + (hs * b62) * k2 + (hs * b63) * k3 +
                           (hs * b64) * k4 + (hs * b65) * k5);

    const State y_new =
        y + (hs * c1) * k1 + (hs * c3) * k3 + (hs * c4) * k4 + (hs * c6) * k6;
    const State err_vec = (hs * d1) * k1 + (hs * d3) * k3 + (hs * d4) * k4 +
                          (hs * d5) * k5 + (hs * d6) * k6;

    const double scale =
        opt.atol + opt.rtol * std::max(max_abs(y), max_abs(y_new));
    const double err = max_abs(err_vec) / scale;

    if (err <= 1.0) {
      x += hs;
      y = y_new;
      observer(x, y);
      const double grow = (err > 1e-10) ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(grow, 0.2, 5.0);
    } else {
      h *= std::max(0.9 * std::pow(err, -0.25), 0.1);
      if (h < h_min)
        throw NumericsError("integrate_rk45: step size underflow at x = " +
                            std::to_string(x));
    }
  }
  throw NumericsError("integrate_rk45: step budget exhausted");
}

template <class State, class F>
void integrate_rk45(F f, double x0, double x1, State& y,
                    const OdeOptions& opt = {}) {
  integrate_rk45(f, x0, x1, y, opt, [](double, const State&) {});
}

}  // namespace detana
