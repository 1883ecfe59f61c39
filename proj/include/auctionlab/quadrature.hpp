#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace auctionlab {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_intervals = 2000;
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule (QUADPACK nodes).
// Returns the K15 estimate; err receives |K15 - G7|.
template <typename F>
double gauss_kronrod_15(const F& f, double a, double b, double& err) {
  static constexpr double xgk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.0};
  static constexpr double wgk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr double wg[4] = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k15 = wgk[7] * fc;
  double g7 = wg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const double fv = f(c - dx) + f(c + dx);
    k15 += wgk[j] * fv;
    if (j % 2 == 1) g7 += wg[(j - 1) / 2] * fv;
  }
  err = std::abs(k15 - g7) * std::abs(h);
  return k15 * h;
}

}  // namespace detail

// Adaptive bisection over [a, b]. Each segment is accepted once its error
// estimate fits within its proportional share of abs_tol, so the accepted
// total stays within abs_tol. Segments shrunk to machine granularity are
// accepted as-is (their contribution is below representable resolution).
template <typename F>
double integrate(F&& f, double a, double b, QuadratureOptions opts = {}) {
  if (!(b > a)) return 0.0;
  struct Segment {
    double a, b;
  };
  const double total_len = b - a;
  std::vector<Segment> stack{{a, b}};
  stack.reserve(64);
  double sum = 0.0;
  int used = 1;
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    double err = 0.0;
    const double val = detail::gauss_kronrod_15(f, seg.a, seg.b, err);
    const double len = seg.b - seg.a;
    const double share = opts.abs_tol * (len / total_len);
    const double floor_len =
        1e-15 * std::max({std::abs(seg.a), std::abs(seg.b), 1.0});
    if (err <= share || len <= floor_len) {
      sum += val;
      continue;
    }
    if (used + 1 > opts.max_intervals)
      throw std::runtime_error("integrate: interval budget exhausted");
    const double mid = 0.5 * (seg.a + seg.b);
    stack.push_back({seg.a, mid});
    stack.push_back({mid, seg.b});
    ++used;
  }
  return sum;
}

// Integral of f over [a, +inf), mapped onto [0,1) by x = a + t/(1-t).
// Gauss-Kronrod nodes are interior, so t = 1 is never evaluated; the guard
// covers only pathological rounding.
template <typename F>
double integrate_tail(F&& f, double a, QuadratureOptions opts = {}) {
  auto mapped = [&f, a](double t) -> double {
    if (t >= 1.0) return 0.0;
    const double om = 1.0 - t;
    return f(a + t / om) / (om * om);
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

}  // namespace auctionlab
