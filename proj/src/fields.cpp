#include "magsat/fields.hpp"
#include "magsat/specfun.hpp"

#include <cmath>

namespace magsat::fields {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const PhysicalConstants &default_constants() {
  static const PhysicalConstants pc{};
  return pc;
}

FieldStrength field_from(double value, FieldUnit unit,
                         const PhysicalConstants &pc) {
  if (!(value > 0.0))
    throw std::domain_error("field_from: field strength must be positive");
  FieldStrength f;
  const double a2 = pc.alpha * pc.alpha;
  switch (unit) {
  case FieldUnit::b:
    f.b = value;
    break;
  case FieldUnit::calB:
    f.b = a2 * value;
    break;
  case FieldUnit::gauss:
    f.b = value / pc.b_cr_gauss;
    break;
  }
  f.calB = f.b / a2;
  f.gauss = f.b * pc.b_cr_gauss;
  f.range_flag = f.b < 1.0    ? RangeFlag::below_range
                 : f.b < 1e5  ? RangeFlag::in_range
                              : RangeFlag::above_range;
  return f;
}

PermittivityModel parse_model(const std::string &name) {
  if (name == "full")
    return PermittivityModel::full;
  if (name == "asymptotic")
    return PermittivityModel::asymptotic;
  if (name == "none" || name == "unity")
    return PermittivityModel::unity;
  throw std::invalid_argument("unknown permittivity model: " + name);
}

std::string model_name(PermittivityModel model) {
  switch (model) {
  case PermittivityModel::full:
    return "full";
  case PermittivityModel::asymptotic:
    return "asymptotic";
  default:
    return "none";
  }
}

Permittivities permittivity(const FieldStrength &field,
                            PermittivityModel model,
                            const PhysicalConstants &pc) {
  const double b = field.b;
  if (!(b > 0.0))
    throw std::domain_error("permittivity: requires b > 0");
  Permittivities eps;
  eps.model = model;
  switch (model) {
  case PermittivityModel::unity:
    break;
  case PermittivityModel::asymptotic:
    eps.eps_par = 1.0 + pc.alpha * b / (3.0 * kPi);
    break;
  case PermittivityModel::full: {
    if (b <= 1e-3)
      throw std::domain_error("permittivity: full model needs b > 1e-3");
    const double q = 0.5 / b;
    eps.eps_perp =
        1.0 - pc.alpha / (2.0 * kPi) *
                  (2.0 / 3.0 * std::log(2.0 * b) - 1.0 / 3.0 -
                   0.5 / (b * b) +
                   (std::log(kPi / b) - 2.0 * specfun::ln_gamma(q)) / b +
                   8.0 * specfun::hurwitz_zeta_sderiv_m1(q));
    eps.eps_par = 1.0 - pc.alpha / (3.0 * kPi) *
                            (b + std::log(2.0 * b) + specfun::digamma(q));
    break;
  }
  }
  return eps;
}

} // namespace magsat::fields
