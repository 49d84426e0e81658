#include "magsat/potential.hpp"
#include "magsat/quadrature.hpp"
#include "magsat/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace magsat::potential {

namespace {

constexpr double kPi = 3.14159265358979323846;

double gamma_ratio_half(int m) {
  // Gamma(|m|+1/2) / Gamma(|m|+1)
  return std::exp(specfun::ln_gamma(m + 0.5) - specfun::ln_gamma(m + 1.0));
}

} // namespace

double radial_function(int n_rho, int m, double u) {
  if (n_rho < 0)
    throw std::domain_error("radial_function: n_rho must be >= 0");
  if (u < 0.0)
    throw std::domain_error("radial_function: rho must be >= 0");
  const int am = std::abs(m);
  const double ln_norm =
      0.5 * (specfun::ln_gamma(am + n_rho + 1.0) -
             specfun::ln_gamma(n_rho + 1.0) - am * std::log(2.0)) -
      specfun::ln_gamma(am + 1.0);
  const double phi = specfun::kummer_m(-n_rho, am + 1.0, 0.5 * u * u);
  const double radial =
      (u > 0.0 ? std::exp(ln_norm - 0.25 * u * u + am * std::log(u))
               : (am == 0 ? std::exp(ln_norm) : 0.0));
  return radial * phi;
}

double anisotropic_coulomb(double zeta_par, double zeta_perp, int Z,
                           const Permittivities &eps,
                           const PhysicalConstants &pc) {
  const double r2 = eps.eps_perp * zeta_par * zeta_par +
                    eps.eps_par * zeta_perp * zeta_perp;
  if (r2 == 0.0)
    throw std::domain_error("anisotropic_coulomb: singular at the origin");
  return -Z * pc.alpha / std::sqrt(eps.eps_perp * r2);
}

double effective_potential_element(int n_rho, int n_rho2, int m, double zeta,
                                   const FieldStrength &field,
                                   const Permittivities &eps, int Z,
                                   const PhysicalConstants &pc) {
  if (n_rho < 0 || n_rho2 < 0)
    throw std::domain_error("effective_potential_element: n_rho must be >= 0");
  const int am = std::abs(m);
  const double b = field.b;
  // X^2 = eps_perp * b * zeta^2 / (2 eps_par)
  const double x2 = eps.eps_perp * b * zeta * zeta / (2.0 * eps.eps_par);
  // prefactor of the t-integral after rho^2 / 2 a_H^2 -> t:
  //   -(Z alpha / sqrt(e_perp)) sqrt(b / 2 e_par) * C
  //   C = sqrt((m+n)!(m+n')!/(n! n'!)) / (m!)^2
  const double ln_c =
      0.5 * (specfun::ln_gamma(am + n_rho + 1.0) +
             specfun::ln_gamma(am + n_rho2 + 1.0) -
             specfun::ln_gamma(n_rho + 1.0) - specfun::ln_gamma(n_rho2 + 1.0)) -
      2.0 * specfun::ln_gamma(am + 1.0);
  const double pref = -Z * pc.alpha / std::sqrt(eps.eps_perp) *
                      std::sqrt(b / (2.0 * eps.eps_par)) * std::exp(ln_c);
  // integrand over t in (0, inf): e^-t t^m M(-n) M(-n') / sqrt(t + X^2),
  // with t = s^2 to flatten the sqrt singularity at t = 0
  auto integrand = [&](double s) {
    const double t = s * s;
    const double laguerre = specfun::kummer_m(-n_rho, am + 1.0, t) *
                            specfun::kummer_m(-n_rho2, am + 1.0, t);
    return 2.0 * s * std::exp(-t + am * std::log(t + 1e-300)) * laguerre /
           std::sqrt(t + x2);
  };
  // e^-t damping: t beyond ~45 + polynomial growth contributes < 1e-16
  const double s_max = std::sqrt(45.0 + 4.0 * (am + n_rho + n_rho2 + 1));
  const auto r = quad::integrate(integrand, 0.0, s_max, 1e-10, 1e-300);
  return pref * r.value;
}

double effective_potential_lll(int m, double zeta, const FieldStrength &field,
                               const Permittivities &eps, int Z,
                               const PhysicalConstants &pc) {
  if (!(field.b > 0.0))
    throw std::domain_error("effective_potential_lll: requires b > 0");
  const int am = std::abs(m);
  const double pref =
      -Z * pc.alpha * pc.alpha *
      std::sqrt(field.calB / (2.0 * eps.eps_perp * eps.eps_par));
  if (zeta == 0.0)
    return pref * gamma_ratio_half(am);
  const double x2 = (eps.eps_perp / eps.eps_par) * 0.5 * field.calB *
                    pc.alpha * pc.alpha * zeta * zeta;
  return pref * specfun::tricomi_u(0.5, 0.5 - am, x2);
}

double saturation_potential(int m, double zeta, int Z,
                            const PhysicalConstants &pc) {
  const int am = std::abs(m);
  const double pref = -Z * std::sqrt(1.5 * kPi * pc.alpha);
  if (zeta == 0.0)
    return pref * gamma_ratio_half(am);
  const double x2 = 1.5 * kPi / pc.alpha * zeta * zeta;
  return pref * specfun::tricomi_u(0.5, 0.5 - am, x2);
}

double coulomb_asymptote(double zeta, const Permittivities &eps, int Z,
                         const PhysicalConstants &pc) {
  if (zeta == 0.0)
    throw std::domain_error("coulomb_asymptote: singular at z = 0");
  return -Z * pc.alpha / (eps.eps_perp * std::abs(zeta));
}

CurveTable emit_curve(const FieldStrength &field, int m, int Z,
                      fields::PermittivityModel model,
                      const std::vector<double> &zeta_grid,
                      const CurveOptions &opts, const PhysicalConstants &pc) {
  for (std::size_t i = 1; i < zeta_grid.size(); ++i)
    if (!(zeta_grid[i] > zeta_grid[i - 1]))
      throw std::invalid_argument("emit_curve: grid must be strictly increasing");
  CurveTable table;
  table.field = field;
  table.m = m;
  table.Z = Z;
  table.model = model;
  table.label = "U0_m" + std::to_string(std::abs(m)) + "_" +
                fields::model_name(model);
  const double scale =
      opts.units == EnergyUnits::rydberg ? mc2_to_rydberg(pc) : 1.0;
  const auto eps = fields::permittivity(field, model, pc);
  const auto eps_unity =
      fields::permittivity(field, fields::PermittivityModel::unity, pc);
  table.samples.reserve(zeta_grid.size());
  for (double zeta : zeta_grid) {
    PotentialSample s;
    s.zeta = zeta;
    s.units_tag = opts.units;
    s.value = scale * effective_potential_lll(m, zeta, field, eps, Z, pc);
    table.samples.push_back(s);
    if (opts.with_saturation)
      table.saturation.push_back(scale * saturation_potential(m, zeta, Z, pc));
    if (opts.with_no_vp)
      table.no_vp.push_back(
          scale * effective_potential_lll(m, zeta, field, eps_unity, Z, pc));
  }
  return table;
}

} // namespace magsat::potential
