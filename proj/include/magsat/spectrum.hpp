#pragma once

//! The modified Karnakov-Popov spectrum equation for even longitudinal
//! levels, its root enumeration, the large-field saturation equation
//! and the logarithmic-derivative formulas whose matching produces it.
//!
//! Binding energies are parameterized by omega > 0 with
//! E = -omega^2 Ry. The right-hand side of the spectrum equation has
//! digamma poles at omega = Z/(eps_perp n), n = 1, 2, ...; the deep
//! root (nu = 0) lies above Z/eps_perp, the nu = n root between
//! consecutive poles.

#include "magsat/fields.hpp"

#include <vector>

namespace magsat::spectrum {

using fields::FieldStrength;
using fields::Permittivities;
using fields::PhysicalConstants;

struct SpectrumRequest {
  FieldStrength field;
  int m = 0; // |m|
  int Z = 1;
  fields::PermittivityModel model = fields::PermittivityModel::full;
  int n_roots = 1;
};

struct SpectrumRoot {
  double omega = 0.0;
  int nu = 0;
  double kappa = 0.0; // Z / (eps_perp omega)
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0; // |rhs(omega) - ln calB|
  double energy_ry = 0.0;
  double energy_ev = 0.0;
};

struct EnergyTriple {
  double ry = 0.0;
  double ev = 0.0;
  double mc2 = 0.0;
};

//! RHS of the spectrum equation:
//! eps_perp w/Z + 2 ln w + 2 psi(1 - Z/(eps_perp w)) + 4 gamma + ln 2
//!   + psi(|m|+1) + ln(eps_par/eps_perp).
//! A root solves rhs(w) = ln calB.
double kp_rhs(double omega, const SpectrumRequest &req,
              const Permittivities &eps,
              const PhysicalConstants &pc = fields::default_constants());

//! Enumerate the first req.n_roots roots, deepest first.
std::vector<SpectrumRoot>
kp_solve(const SpectrumRequest &req,
         const PhysicalConstants &pc = fields::default_constants());

//! Deep root of the saturation equation
//! w/Z + 2 ln w + 2 psi(1 - Z/w)
//!   = ln(calB/(1 + alpha^3 calB/3pi)) - 4 gamma - ln 2 - psi(|m|+1).
//! calB = +infinity gives the limiting argument 3 pi / alpha^3.
SpectrumRoot
saturation_solve(int m, int Z, double calB,
                 const PhysicalConstants &pc = fields::default_constants());

//! Short-range perturbative log-derivative,
//! -(Z/eps_perp)[ln 4 X^2 - psi(|m|+1)], X^2 = (e_perp/e_par)(calB/2) xi^2,
//! xi in Bohr-radius units.
double log_derivative_short(double xi, int m, int Z,
                            const FieldStrength &field,
                            const Permittivities &eps);

//! Long-range Whittaker log-derivative at small argument,
//! -w - 2 w kappa [ln 2 w xi + psi(1 - kappa) + 2 gamma].
double log_derivative_long(double xi, double omega, double kappa,
                           const PhysicalConstants &pc = fields::default_constants());

//! Machet-Vysotsky interpolated log-derivative,
//! -Z [ln(2 calB xi^2/(1 + alpha^3 calB/3pi)) - psi(|m|+1)].
double log_derivative_mv(double xi, const FieldStrength &field, int m, int Z,
                         const PhysicalConstants &pc = fields::default_constants());

//! E(omega) in Rydberg, eV and Mc^2 units.
EnergyTriple
energy_convert(double omega,
               const PhysicalConstants &pc = fields::default_constants());

} // namespace magsat::spectrum
