#include "magsat/validity.hpp"
#include "magsat/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace magsat::validity {

namespace {

double tricomi_x2(const FieldStrength &field, const Permittivities &eps,
                  double zeta, const PhysicalConstants &pc) {
  return (eps.eps_perp / eps.eps_par) * 0.5 * field.calB * pc.alpha *
         pc.alpha * zeta * zeta;
}

double tricomi_at(int m, double x2) {
  if (x2 == 0.0)
    return std::exp(specfun::ln_gamma(std::abs(m) + 0.5) -
                    specfun::ln_gamma(std::abs(m) + 1.0));
  return specfun::tricomi_u(0.5, 0.5 - std::abs(m), x2);
}

} // namespace

double shallow_well_xi(const FieldStrength &field, int m, int Z,
                       const Permittivities &eps, double zeta, double K,
                       const PhysicalConstants &pc) {
  if (!(K > 0.0))
    throw std::domain_error("shallow_well_xi: requires K > 0");
  const double x2 = tricomi_x2(field, eps, zeta, pc);
  return Z * pc.alpha * pc.alpha *
         std::sqrt(field.calB / (2.0 * std::abs(eps.eps_perp * eps.eps_par))) *
         std::abs(tricomi_at(m, x2)) * K * K;
}

double coulomb_ratio(const FieldStrength &field, int m, double zeta,
                     const Permittivities &eps, const PhysicalConstants &pc) {
  if (!(zeta > 0.0))
    throw std::domain_error("coulomb_ratio: requires z > 0");
  const double x2 = tricomi_x2(field, eps, zeta, pc);
  return std::sqrt(x2) * tricomi_at(m, x2);
}

double adiabatic_parameter(const FieldStrength &field,
                           const Permittivities &eps, double zeta) {
  if (!(zeta > 0.0))
    throw std::domain_error("adiabatic_parameter: requires z > 0");
  return eps.eps_par / (eps.eps_perp * field.b * zeta * zeta);
}

ValidityReport validity_report(const FieldStrength &field, int m, int Z,
                               double K, fields::PermittivityModel model,
                               const ValidityThresholds &thr,
                               const PhysicalConstants &pc) {
  const auto eps = fields::permittivity(field, model, pc);
  ValidityReport rep;
  rep.K = K;
  if (K > 0.0) {
    constexpr int kSweep = 256;
    double lo = 1e308, hi = 0.0;
    for (int i = 0; i < kSweep; ++i) {
      const double zeta = K * i / (kSweep - 1);
      const double xi = shallow_well_xi(field, m, Z, eps, zeta, K, pc);
      lo = std::min(lo, xi);
      hi = std::max(hi, xi);
    }
    rep.xi_min = lo;
    rep.xi_max = hi;
    rep.ratio_at_probe = coulomb_ratio(field, m, K, eps, pc);
    rep.adiabatic_param = adiabatic_parameter(field, eps, K);
  }
  const bool shallow = rep.xi_max < thr.xi_shallow;
  const bool coulombian = rep.ratio_at_probe > thr.ratio_coulomb;
  if (shallow && coulombian)
    rep.verdict = Verdict::ok;
  else if (rep.xi_max >= 1.0 || rep.ratio_at_probe <= 0.5 * thr.ratio_coulomb)
    rep.verdict = Verdict::violated; // condition "<< 1" outright broken
  else
    rep.verdict = Verdict::marginal;
  return rep;
}

} // namespace magsat::validity
