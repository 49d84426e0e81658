#pragma once

//! Direct numerical solution of the longitudinal Schroedinger equation
//!   chi''(xi) = (omega^2 + U(xi)/Ry) chi(xi),  xi = z/a_B,
//! by even-parity shooting (chi(0) = 1, chi'(0) = 0). Provides an
//! eigenvalue path entirely independent of the spectrum-equation
//! matching: the ground omega is located by bisection on the
//! node-count transition of the integrated solution.

#include "magsat/spectrum.hpp"

#include <functional>

namespace magsat::shooting {

using spectrum::SpectrumRequest;
using spectrum::SpectrumRoot;

//! Potential in Rydberg units as a function of xi (Bohr radii).
using PotentialRy = std::function<double(double)>;

struct ShootingConfig {
  double xi_max = 0.0;      // 0 = choose from the trial omega
  double step_tol = 1e-10;  // local truncation error target
  double omega_lo = 0.5;
  double omega_hi = 40.0;
  int max_bisections = 60;
};

struct IntegrationResult {
  double endpoint_value = 0.0; // chi at xi_max, possibly renormalized
  int node_count = 0;
};

//! Integrate outward for a trial omega. chi is renormalized whenever
//! |chi| exceeds 1e150 (sign preserved), so only the sign and node
//! count of the endpoint are meaningful for deeply classically
//! forbidden tails.
IntegrationResult integrate_even(double omega, const PotentialRy &potential,
                                 const ShootingConfig &cfg);

//! Ground-state omega of an arbitrary attractive even potential.
SpectrumRoot shoot_ground_on(const PotentialRy &potential,
                             const ShootingConfig &cfg,
                             const fields::PhysicalConstants &pc =
                                 fields::default_constants());

//! Ground-state omega for the LLL effective potential selected by req.
SpectrumRoot shoot_ground(const SpectrumRequest &req,
                          const ShootingConfig &cfg = {},
                          const fields::PhysicalConstants &pc =
                              fields::default_constants());

//! The LLL effective potential of req expressed in Rydberg units over
//! Bohr-radius abscissae, as fed to the integrator.
PotentialRy potential_for(const SpectrumRequest &req,
                          const fields::PhysicalConstants &pc =
                              fields::default_constants());

} // namespace magsat::shooting
