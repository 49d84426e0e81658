#include "magsat/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace magsat::quad {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[15] = {
    -0.991455371120812639207, -0.949107912342758524526,
    -0.864864423359769072789, -0.741531185599394439864,
    -0.586087235467691130294, -0.405845151377397166907,
    -0.207784955007898467601, 0.0,
    0.207784955007898467601,  0.405845151377397166907,
    0.586087235467691130294,  0.741531185599394439864,
    0.864864423359769072789,  0.949107912342758524526,
    0.991455371120812639207};
constexpr double kWgk[15] = {
    0.022935322010529224964, 0.063092092629978553291,
    0.104790010322250183839, 0.140653259715525918745,
    0.169004726639267902827, 0.190350578064785409913,
    0.204432940075298892414, 0.209482141084727828013,
    0.204432940075298892414, 0.190350578064785409913,
    0.169004726639267902827, 0.140653259715525918745,
    0.104790010322250183839, 0.063092092629978553291,
    0.022935322010529224964};
constexpr double kWg[7] = {
    0.129484966168869693271, 0.279705391489276667901,
    0.381830050505118944950, 0.417959183673469387755,
    0.381830050505118944950, 0.279705391489276667901,
    0.129484966168869693271};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel &o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)> &f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double fx[15];
  double gk = 0.0, g = 0.0, resabs = 0.0;
  for (int i = 0; i < 15; ++i) {
    fx[i] = f(mid + half * kXgk[i]);
    gk += kWgk[i] * fx[i];
    resabs += kWgk[i] * std::abs(fx[i]);
    if (i % 2 == 1)
      g += kWg[i / 2] * fx[i];
  }
  // integral of |f - mean| over the panel, the QUADPACK scale for
  // sharpening the Gauss/Kronrod difference
  const double mean = 0.5 * gk;
  double resasc = 0.0;
  for (int i = 0; i < 15; ++i)
    resasc += kWgk[i] * std::abs(fx[i] - mean);
  gk *= half;
  g *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  const double diff = std::abs(gk - g);
  double err = diff;
  if (resasc != 0.0 && diff != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
  err = std::max(err, 50.0 * 2.22e-16 * resabs);
  return {lo, hi, gk, err};
}

} // namespace

QuadResult integrate(const std::function<double(double)> &f, double lo,
                     double hi, double rel_tol, double abs_tol,
                     int max_panels) {
  std::priority_queue<Panel> panels;
  Panel p0 = evaluate(f, lo, hi);
  double total = p0.value;
  double total_err = p0.error;
  panels.push(p0);
  int n = 1;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) &&
         n < max_panels) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel a = evaluate(f, worst.lo, mid);
    Panel b = evaluate(f, mid, worst.hi);
    total += a.value + b.value - worst.value;
    total_err += a.error + b.error - worst.error;
    panels.push(a);
    panels.push(b);
    ++n;
  }
  QuadResult r{total, total_err,
               total_err <= std::max(abs_tol, rel_tol * std::abs(total))};
  if (!r.converged)
    throw QuadratureError("adaptive quadrature did not converge", r);
  return r;
}

} // namespace magsat::quad
