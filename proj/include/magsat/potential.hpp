#pragma once

//! Landau radial functions, the anisotropic Coulomb potential and the
//! Landau-orbit-averaged effective potentials of the longitudinal
//! problem. Lengths are held in units of the electron Compton length
//! lambda_C throughout; energies in units of the electron rest energy
//! Mc^2 unless stated otherwise.
//!
//! Useful conversions (centralized here):
//!   a_H = lambda_C b^{-1/2}   (magnetic length)
//!   a_B = lambda_C / alpha    (Bohr radius)
//!   U[Ry] = U[Mc^2] * 2 / alpha^2

#include "magsat/fields.hpp"

#include <string>
#include <vector>

namespace magsat::potential {

using fields::FieldStrength;
using fields::Permittivities;
using fields::PhysicalConstants;

//! Landau-state labels. The LLL band is n_rho = 0, m = -|m| <= 0,
//! sigma = -1 and has exactly zero transverse energy.
struct QuantumNumbers {
  int n_rho = 0;
  int m = 0;
  int sigma = -1;
  int nu = 0;

  bool is_lll() const { return n_rho == 0 && m <= 0 && sigma == -1; }
  //! Transverse Landau energy in units of hbar eB/Mc.
  double transverse_energy_units_cyclotron() const {
    return n_rho + 0.5 * (std::abs(m) + m + 1 + sigma);
  }
};

enum class EnergyUnits { mc2, rydberg };

struct PotentialSample {
  double zeta = 0.0;  // z / lambda_C
  double value = 0.0; // energy, units per units_tag
  EnergyUnits units_tag = EnergyUnits::mc2;
};

//! One curve of the effective potential, optionally accompanied by the
//! saturation and no-VP curves on the same abscissae.
struct CurveTable {
  std::string label;
  std::vector<PotentialSample> samples;
  std::vector<double> saturation;  // empty or samples.size()
  std::vector<double> no_vp;       // empty or samples.size()
  FieldStrength field;
  int m = 0;
  int Z = 1;
  fields::PermittivityModel model = fields::PermittivityModel::full;
};

//! Radial Landau function R_{n_rho m}(rho) in units where a_H = 1
//! (value carries units 1/a_H). Normalized as int R^2 rho drho = 1.
double radial_function(int n_rho, int m, double rho_over_aH);

//! Anisotropic Coulomb energy -e A_0 at (zeta_par, zeta_perp), both in
//! lambda_C units. Singular at the origin.
double anisotropic_coulomb(double zeta_par, double zeta_perp, int Z,
                           const Permittivities &eps,
                           const PhysicalConstants &pc = fields::default_constants());

//! Matrix element U_{n_rho n_rho'}^{|m|}(z) of the anisotropic Coulomb
//! potential between Landau radial states, by adaptive quadrature.
double effective_potential_element(int n_rho, int n_rho2, int m, double zeta,
                                   const FieldStrength &field,
                                   const Permittivities &eps, int Z,
                                   const PhysicalConstants &pc = fields::default_constants());

//! Closed-form diagonal LLL effective potential
//! U_0^{|m|} = -Z alpha^2 sqrt(calB/(2 e_perp e_par))
//!             Psi(1/2, 1/2-|m|; X^2),
//! X^2 = (e_perp/e_par)(calB/2) alpha^2 zeta^2. At zeta = 0 the
//! analytic limit -.. Gamma(|m|+1/2)/Gamma(|m|+1) is used.
double effective_potential_lll(int m, double zeta, const FieldStrength &field,
                               const Permittivities &eps, int Z,
                               const PhysicalConstants &pc = fields::default_constants());

//! Field-independent saturation curve
//! -Z sqrt(3 pi alpha / 2) Psi(1/2, 1/2-|m|; (3 pi / 2 alpha) zeta^2).
double saturation_potential(int m, double zeta, int Z,
                            const PhysicalConstants &pc = fields::default_constants());

//! Large-distance Coulomb form -Z alpha / (eps_perp |zeta|).
double coulomb_asymptote(double zeta, const Permittivities &eps, int Z,
                         const PhysicalConstants &pc = fields::default_constants());

struct CurveOptions {
  bool with_saturation = false;
  bool with_no_vp = false;
  EnergyUnits units = EnergyUnits::mc2;
};

CurveTable emit_curve(const FieldStrength &field, int m, int Z,
                      fields::PermittivityModel model,
                      const std::vector<double> &zeta_grid,
                      const CurveOptions &opts = {},
                      const PhysicalConstants &pc = fields::default_constants());

//! Mc^2 -> Rydberg conversion factor, 2/alpha^2.
inline double mc2_to_rydberg(const PhysicalConstants &pc) {
  return 2.0 / (pc.alpha * pc.alpha);
}

} // namespace magsat::potential
