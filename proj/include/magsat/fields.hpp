#pragma once

//! Magnetic-field unit handling and the dielectric response of the
//! magnetized vacuum. Fields are carried in three equivalent scales:
//! b = B/B_cr (Schwinger critical field), calB = B/B_a (atomic
//! reference field, B_a = alpha^2 B_cr) and gauss.

#include <stdexcept>
#include <string>

namespace magsat::fields {

struct PhysicalConstants {
  double alpha = 7.2973525693e-3; // CODATA fine-structure constant
  double mc2_ev = 510998.95000;   // electron rest energy
  double b_cr_gauss = 4.41381e13; // Schwinger critical field
  double euler_gamma = 0.57721566490153286061;

  double rydberg_ev() const { return 0.5 * alpha * alpha * mc2_ev; }
  double b_a_gauss() const { return alpha * alpha * b_cr_gauss; }
};

//! The library-wide default constants object.
const PhysicalConstants &default_constants();

enum class FieldUnit { b, calB, gauss };
enum class RangeFlag { below_range, in_range, above_range };

//! One magnetic field, all three scales populated consistently.
//! The range flag records where b sits relative to the working
//! window 1 <= b < 1e5; it never gates a computation.
struct FieldStrength {
  double b = 0.0;
  double calB = 0.0;
  double gauss = 0.0;
  RangeFlag range_flag = RangeFlag::in_range;
};

FieldStrength field_from(double value, FieldUnit unit,
                         const PhysicalConstants &pc = default_constants());

enum class PermittivityModel { full, asymptotic, unity };

PermittivityModel parse_model(const std::string &name);
std::string model_name(PermittivityModel model);

struct Permittivities {
  double eps_perp = 1.0;
  double eps_par = 1.0;
  PermittivityModel model = PermittivityModel::unity;
};

//! (eps_perp, eps_par) for the requested model.
//!  - unity:      (1, 1), no vacuum polarization
//!  - asymptotic: (1, 1 + alpha b / 3 pi), leading large-b behavior
//!  - full:       one-loop next-to-leading expressions built from
//!                log-gamma, digamma and Hurwitz zeta terms
Permittivities permittivity(const FieldStrength &field,
                            PermittivityModel model,
                            const PhysicalConstants &pc = default_constants());

} // namespace magsat::fields
