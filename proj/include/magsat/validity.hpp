#pragma once

//! Diagnostics for the applicability of the matching procedure behind
//! the spectrum equation: shallow-well coefficient Xi, Coulomb ratio R
//! and the adiabatic small parameter. These warn; they never gate a
//! computation.

#include "magsat/fields.hpp"

namespace magsat::validity {

using fields::FieldStrength;
using fields::Permittivities;
using fields::PhysicalConstants;

enum class Verdict { ok, marginal, violated };

struct ValidityThresholds {
  double xi_shallow = 0.1;   // xi_max below this counts as shallow
  double ratio_coulomb = 0.9; // probe ratio above this counts as Coulombian
};

struct ValidityReport {
  double xi_min = 0.0;
  double xi_max = 0.0;
  double ratio_at_probe = 0.0;
  double adiabatic_param = 0.0;
  double K = 0.0; // well support in Compton lengths
  Verdict verdict = Verdict::ok;
};

//! Shallow-well coefficient
//! Xi^{|m|} = Z alpha^2 sqrt(calB/(2|e_perp e_par|))
//!            |Psi(1/2, 1/2-|m|; X^2)| K^2.
double shallow_well_xi(const FieldStrength &field, int m, int Z,
                       const Permittivities &eps, double zeta, double K,
                       const PhysicalConstants &pc = fields::default_constants());

//! Ratio of the effective potential to its Coulomb asymptote,
//! sqrt(X^2) Psi(1/2, 1/2-|m|; X^2); in (0, 1), -> 1 as z -> inf.
double coulomb_ratio(const FieldStrength &field, int m, double zeta,
                     const Permittivities &eps,
                     const PhysicalConstants &pc = fields::default_constants());

//! Small parameter eps_par rho^2 / (eps_perp z^2) with rho = a_H,
//! i.e. eps_par / (eps_perp b zeta^2).
double adiabatic_parameter(const FieldStrength &field,
                           const Permittivities &eps, double zeta);

//! Aggregate report: Xi extrema over zeta in [0, K] (256-point sweep,
//! endpoints included), Coulomb ratio probed at zeta = K, adiabatic
//! parameter at zeta = K.
ValidityReport validity_report(const FieldStrength &field, int m, int Z,
                               double K, fields::PermittivityModel model,
                               const ValidityThresholds &thr = {},
                               const PhysicalConstants &pc = fields::default_constants());

} // namespace magsat::validity
