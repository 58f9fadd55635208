#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace roughcomb {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 50;
};

namespace detail {

// 15-point Kronrod nodes on [0, 1] side (symmetric) with the embedded
// 7-point Gauss rule; classic QUADPACK constants.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double lo, double hi) {
  double c = 0.5 * (lo + hi);
  double h = 0.5 * (hi - lo);
  double fc = f(c);
  double kron = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double fa = f(c - h * kKronrodNodes[i]);
    double fb = f(c + h * kKronrodNodes[i]);
    kron += kKronrodWeights[i] * (fa + fb);
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (fa + fb);
  }
  kron *= h;
  gauss *= h;
  return {kron, std::abs(kron - gauss)};
}

template <class F>
double adaptive_gk(F&& f, double lo, double hi, double tol, double rel_tol, int depth) {
  auto [value, err] = gauss_kronrod_15(f, lo, hi);
  if (err <= tol || err <= rel_tol * std::abs(value)) return value;
  if (depth <= 0) throw std::runtime_error("integrate_1d: max_depth exceeded without convergence");
  double mid = 0.5 * (lo + hi);
  return adaptive_gk(f, lo, mid, 0.5 * tol, rel_tol, depth - 1) +
         adaptive_gk(f, mid, hi, 0.5 * tol, rel_tol, depth - 1);
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [lo, hi].  Within max(abs_tol, rel_tol*|I|) for
// smooth integrands; throws on max_depth exhaustion.
template <class F>
double integrate_1d(F&& f, double lo, double hi, QuadratureSpec spec = {}) {
  if (!(lo <= hi)) throw std::invalid_argument("integrate_1d: lo > hi");
  if (lo == hi) return 0.0;
  return detail::adaptive_gk(f, lo, hi, spec.abs_tol, spec.rel_tol, spec.max_depth);
}

// Iterated 2D integral over { lo_x <= x <= hi_x, ylo(x) <= y <= yhi(x) }.
// The inner integral runs at spec tolerance / 10 so the compounded error
// stays within the outer budget.
template <class F, class YLo, class YHi>
double integrate_2d(F&& f, double lo_x, double hi_x, YLo&& ylo, YHi&& yhi,
                    QuadratureSpec spec = {}) {
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol / 10.0;
  inner.rel_tol = spec.rel_tol / 10.0;
  auto outer = [&](double x) {
    double a = ylo(x);
    double b = yhi(x);
    if (!(b > a)) return 0.0;
    return integrate_1d([&](double y) { return f(x, y); }, a, b, inner);
  };
  return integrate_1d(outer, lo_x, hi_x, spec);
}

template <class F>
double integrate_2d_rect(F&& f, double lo_x, double hi_x, double lo_y, double hi_y,
                         QuadratureSpec spec = {}) {
  return integrate_2d(std::forward<F>(f), lo_x, hi_x, [=](double) { return lo_y; },
                      [=](double) { return hi_y; }, spec);
}

}  // namespace roughcomb
