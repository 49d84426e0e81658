#include "magsat/shooting.hpp"
#include "magsat/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace magsat::shooting {

namespace {

struct State {
  double chi;
  double dchi;
};

// Cash-Karp embedded 4(5) step for chi'' = w2u(xi) chi.
State rk_step(const State &y, double xi, double h,
              const std::function<double(double)> &w2u, double &err) {
  auto f = [&](double x, const State &s) {
    return State{s.dchi, w2u(x) * s.chi};
  };
  constexpr double b21 = 0.2;
  constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
  constexpr double b41 = 0.3, b42 = -0.9, b43 = 1.2;
  constexpr double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0,
                   b54 = 35.0 / 27.0;
  constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0,
                   b63 = 575.0 / 13824.0, b64 = 44275.0 / 110592.0,
                   b65 = 253.0 / 4096.0;
  constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0,
                   c6 = 512.0 / 1771.0;
  constexpr double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                   d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0,
                   d6 = c6 - 0.25;
  const State k1 = f(xi, y);
  const State k2 = f(xi + 0.2 * h, {y.chi + h * b21 * k1.chi,
                                    y.dchi + h * b21 * k1.dchi});
  const State k3 = f(xi + 0.3 * h,
                     {y.chi + h * (b31 * k1.chi + b32 * k2.chi),
                      y.dchi + h * (b31 * k1.dchi + b32 * k2.dchi)});
  const State k4 =
      f(xi + 0.6 * h,
        {y.chi + h * (b41 * k1.chi + b42 * k2.chi + b43 * k3.chi),
         y.dchi + h * (b41 * k1.dchi + b42 * k2.dchi + b43 * k3.dchi)});
  const State k5 =
      f(xi + h, {y.chi + h * (b51 * k1.chi + b52 * k2.chi + b53 * k3.chi +
                              b54 * k4.chi),
                 y.dchi + h * (b51 * k1.dchi + b52 * k2.dchi + b53 * k3.dchi +
                               b54 * k4.dchi)});
  const State k6 =
      f(xi + 0.875 * h,
        {y.chi + h * (b61 * k1.chi + b62 * k2.chi + b63 * k3.chi +
                      b64 * k4.chi + b65 * k5.chi),
         y.dchi + h * (b61 * k1.dchi + b62 * k2.dchi + b63 * k3.dchi +
                       b64 * k4.dchi + b65 * k5.dchi)});
  State out{y.chi + h * (c1 * k1.chi + c3 * k3.chi + c4 * k4.chi + c6 * k6.chi),
            y.dchi +
                h * (c1 * k1.dchi + c3 * k3.dchi + c4 * k4.dchi + c6 * k6.dchi)};
  const double e_chi =
      h * (d1 * k1.chi + d3 * k3.chi + d4 * k4.chi + d5 * k5.chi + d6 * k6.chi);
  const double e_dchi = h * (d1 * k1.dchi + d3 * k3.dchi + d4 * k4.dchi +
                             d5 * k5.dchi + d6 * k6.dchi);
  const double scale = std::max({std::abs(out.chi), std::abs(out.dchi), 1.0});
  err = std::max(std::abs(e_chi), std::abs(e_dchi)) / scale;
  return out;
}

} // namespace

IntegrationResult integrate_even(double omega, const PotentialRy &potential,
                                 const ShootingConfig &cfg) {
  if (!(omega > 0.0))
    throw std::domain_error("integrate_even: requires omega > 0");
  const double xi_max = cfg.xi_max > 0.0 ? cfg.xi_max
                                         : std::max(30.0 / omega, 0.5);
  auto w2u = [&](double xi) { return omega * omega + potential(xi); };

  State y{1.0, 0.0};
  double xi = 0.0;
  double h = 1e-6;
  int nodes = 0;
  double prev_sign = 1.0;
  const double tol = cfg.step_tol;
  while (xi < xi_max) {
    h = std::min(h, xi_max - xi);
    double err;
    State trial = rk_step(y, xi, h, w2u, err);
    if (err > tol && h > 1e-14) {
      h *= std::max(0.2, 0.9 * std::pow(tol / err, 0.25));
      continue;
    }
    xi += h;
    y = trial;
    const double sign = y.chi >= 0.0 ? 1.0 : -1.0;
    if (sign != prev_sign && y.chi != 0.0) {
      ++nodes;
      prev_sign = sign;
    }
    if (std::abs(y.chi) > 1e150 || std::abs(y.dchi) > 1e150) {
      y.chi *= 1e-140;
      y.dchi *= 1e-140;
    }
    if (err > 0.0)
      h *= std::min(5.0, 0.9 * std::pow(tol / err, 0.2));
    else
      h *= 5.0;
  }
  return {y.chi, nodes};
}

SpectrumRoot shoot_ground_on(const PotentialRy &potential,
                             const ShootingConfig &cfg,
                             const fields::PhysicalConstants &pc) {
  double lo = cfg.omega_lo, hi = cfg.omega_hi;
  // trial omega above the eigenvalue: nodeless; below: a node appears
  const int n_lo = integrate_even(lo, potential, cfg).node_count;
  const int n_hi = integrate_even(hi, potential, cfg).node_count;
  if (n_lo == 0 || n_hi != 0)
    throw std::runtime_error(
        "shoot_ground: node-count signature constant across omega bracket");
  for (int i = 0; i < cfg.max_bisections && (hi - lo) > 1e-8 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (integrate_even(mid, potential, cfg).node_count > 0)
      lo = mid;
    else
      hi = mid;
  }
  SpectrumRoot r;
  r.nu = 0;
  r.omega = 0.5 * (lo + hi);
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  const auto en = spectrum::energy_convert(r.omega, pc);
  r.energy_ry = en.ry;
  r.energy_ev = en.ev;
  return r;
}

PotentialRy potential_for(const SpectrumRequest &req,
                          const fields::PhysicalConstants &pc) {
  const auto eps = fields::permittivity(req.field, req.model, pc);
  const double to_ry = potential::mc2_to_rydberg(pc);
  const auto field = req.field;
  const int m = req.m;
  const int Z = req.Z;
  return [=, consts = pc](double xi) {
    const double zeta = xi / consts.alpha;
    return to_ry *
           potential::effective_potential_lll(m, zeta, field, eps, Z, consts);
  };
}

SpectrumRoot shoot_ground(const SpectrumRequest &req,
                          const ShootingConfig &cfg,
                          const fields::PhysicalConstants &pc) {
  SpectrumRoot r = shoot_ground_on(potential_for(req, pc), cfg, pc);
  const auto eps = fields::permittivity(req.field, req.model, pc);
  r.kappa = req.Z / (eps.eps_perp * r.omega);
  return r;
}

} // namespace magsat::shooting
