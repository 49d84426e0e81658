#include "magsat/spectrum.hpp"
#include "magsat/specfun.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace magsat::spectrum {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Brent's method on a sign-changing bracket [lo, hi].
double brent(const std::function<double(double)> &f, double lo, double hi,
             double f_lo, double f_hi, double x_tol) {
  double a = lo, b = hi, fa = f_lo, fb = f_hi;
  if (fa * fb > 0.0)
    throw std::runtime_error("brent: bracket does not change sign");
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * 2.22e-16 * std::abs(b) + 0.5 * x_tol;
    const double mid = 0.5 * (c - b);
    if (std::abs(mid) <= tol || fb == 0.0)
      return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) { // secant
        p = 2.0 * mid * s;
        q = 1.0 - s;
      } else { // inverse quadratic
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * mid * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0)
        q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * mid * q - std::abs(tol * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = mid;
        e = d;
      }
    } else {
      d = mid;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (mid > 0.0 ? tol : -tol);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

// Solve g(w) = 0 on an inter-pole interval (lo_pole, hi_limit) where g
// runs from -inf to +inf. delta guards the pole; it shrinks on bracket
// failure.
double solve_increasing(const std::function<double(double)> &g,
                        double lo_pole, double hi_limit, double delta,
                        bool hi_is_pole) {
  for (int attempt = 0; attempt < 6; ++attempt) {
    const double lo = lo_pole + delta;
    const double hi = hi_is_pole ? hi_limit - delta : hi_limit;
    if (lo < hi) {
      const double g_lo = g(lo);
      const double g_hi = g(hi);
      if (g_lo < 0.0 && g_hi > 0.0)
        return brent(g, lo, hi, g_lo, g_hi, 1e-12);
    }
    delta *= 0.1;
  }
  throw std::runtime_error("kp_solve: no root in bracket");
}

} // namespace

double kp_rhs(double omega, const SpectrumRequest &req,
              const Permittivities &eps, const PhysicalConstants &pc) {
  if (!(omega > 0.0))
    throw std::domain_error("kp_rhs: requires omega > 0");
  const double arg = 1.0 - req.Z / (eps.eps_perp * omega);
  return eps.eps_perp * omega / req.Z + 2.0 * std::log(omega) +
         2.0 * specfun::digamma(arg) + 4.0 * pc.euler_gamma + std::log(2.0) +
         specfun::digamma(req.m + 1.0) + std::log(eps.eps_par / eps.eps_perp);
}

std::vector<SpectrumRoot> kp_solve(const SpectrumRequest &req,
                                   const PhysicalConstants &pc) {
  if (req.n_roots < 1)
    throw std::invalid_argument("kp_solve: n_roots must be >= 1");
  if (req.Z < 1 || req.Z > 10)
    throw std::invalid_argument("kp_solve: Z must be in 1..10");
  const double target = std::log(req.field.calB);
  if (!std::isfinite(target))
    throw std::domain_error("kp_solve: ln calB must be finite");
  const auto eps = fields::permittivity(req.field, req.model, pc);
  auto g = [&](double w) { return kp_rhs(w, req, eps, pc) - target; };

  std::vector<SpectrumRoot> roots;
  const double pole_scale = req.Z / eps.eps_perp;
  const double delta0 = 1e-9 * pole_scale;
  for (int nu = 0; nu < req.n_roots; ++nu) {
    SpectrumRoot r;
    r.nu = nu;
    if (nu == 0) {
      r.bracket_lo = pole_scale;
      r.bracket_hi = 10.0 * (target + 20.0);
      r.omega = solve_increasing(g, r.bracket_lo, r.bracket_hi, delta0, false);
    } else {
      r.bracket_lo = pole_scale / (nu + 1);
      r.bracket_hi = pole_scale / nu;
      r.omega = solve_increasing(g, r.bracket_lo, r.bracket_hi,
                                 delta0 / (nu + 1), true);
    }
    r.kappa = req.Z / (eps.eps_perp * r.omega);
    r.residual = std::abs(g(r.omega));
    const auto en = energy_convert(r.omega, pc);
    r.energy_ry = en.ry;
    r.energy_ev = en.ev;
    roots.push_back(r);
  }
  return roots;
}

SpectrumRoot saturation_solve(int m, int Z, double calB,
                              const PhysicalConstants &pc) {
  if (m < 0 || Z < 1)
    throw std::invalid_argument("saturation_solve: requires m >= 0, Z >= 1");
  const double a3 = pc.alpha * pc.alpha * pc.alpha;
  const double log_arg = std::isinf(calB)
                             ? 3.0 * kPi / a3
                             : calB / (1.0 + a3 * calB / (3.0 * kPi));
  const double target = std::log(log_arg) - 4.0 * pc.euler_gamma -
                        std::log(2.0) - specfun::digamma(m + 1.0);
  auto g = [&](double w) {
    return w / Z + 2.0 * std::log(w) + 2.0 * specfun::digamma(1.0 - Z / w) -
           target;
  };
  SpectrumRoot r;
  r.nu = 0;
  r.bracket_lo = Z;
  r.bracket_hi = 10.0 * (std::abs(target) + 20.0);
  r.omega = solve_increasing(g, r.bracket_lo, r.bracket_hi, 1e-9 * Z, false);
  r.kappa = Z / r.omega;
  r.residual = std::abs(g(r.omega));
  const auto en = energy_convert(r.omega, pc);
  r.energy_ry = en.ry;
  r.energy_ev = en.ev;
  return r;
}

double log_derivative_short(double xi, int m, int Z,
                            const FieldStrength &field,
                            const Permittivities &eps) {
  if (!(xi > 0.0))
    throw std::domain_error("log_derivative_short: requires xi > 0");
  const double x2 = (eps.eps_perp / eps.eps_par) * 0.5 * field.calB * xi * xi;
  return -(Z / eps.eps_perp) *
         (std::log(4.0 * x2) - specfun::digamma(m + 1.0));
}

double log_derivative_long(double xi, double omega, double kappa,
                           const PhysicalConstants &pc) {
  if (!(xi > 0.0))
    throw std::domain_error("log_derivative_long: requires xi > 0");
  return -omega - 2.0 * omega * kappa *
                      (std::log(2.0 * omega * xi) +
                       specfun::digamma(1.0 - kappa) + 2.0 * pc.euler_gamma);
}

double log_derivative_mv(double xi, const FieldStrength &field, int m, int Z,
                         const PhysicalConstants &pc) {
  if (!(xi > 0.0))
    throw std::domain_error("log_derivative_mv: requires xi > 0");
  const double a3 = pc.alpha * pc.alpha * pc.alpha;
  const double arg =
      2.0 * field.calB * xi * xi / (1.0 + a3 * field.calB / (3.0 * kPi));
  return -Z * (std::log(arg) - specfun::digamma(m + 1.0));
}

EnergyTriple energy_convert(double omega, const PhysicalConstants &pc) {
  if (!(omega > 0.0))
    throw std::domain_error("energy_convert: requires omega > 0");
  EnergyTriple e;
  e.ry = -omega * omega;
  e.ev = e.ry * pc.rydberg_ev();
  e.mc2 = e.ry * 0.5 * pc.alpha * pc.alpha;
  return e;
}

} // namespace magsat::spectrum
