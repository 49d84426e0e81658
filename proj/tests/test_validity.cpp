#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "magsat/validity.hpp"

#include <cmath>

using namespace magsat::validity;
namespace mf = magsat::fields;

namespace {
mf::FieldStrength field(double calB) {
  return mf::field_from(calB, mf::FieldUnit::calB);
}
} // namespace

TEST_CASE("shallow-well coefficient: frozen extrema") {
  // frozen 256-point sweep extrema, full model
  struct Row {
    double calB;
    int m;
    double K;
    double lo, hi;
  };
  const Row rows[] = {
      {1e5, 0, 1.5, 0.0102, 0.0474}, {1e9, 0, 1.5, 0.0110, 0.7334},
      {1e5, 0, 3.0, 0.0215, 0.1897}, {1e9, 0, 3.0, 0.0220, 2.9336},
      {1e5, 1, 1.5, 0.0096, 0.0237}, {1e9, 1, 1.5, 0.0110, 0.3667},
      {1e5, 1, 3.0, 0.0211, 0.0949}, {1e9, 1, 3.0, 0.0220, 1.4668},
  };
  for (const auto &r : rows) {
    const auto rep = validity_report(field(r.calB), r.m, 1, r.K,
                                     mf::PermittivityModel::full);
    CHECK(rep.xi_min == doctest::Approx(r.lo).epsilon(5e-3));
    CHECK(rep.xi_max == doctest::Approx(r.hi).epsilon(5e-3));
    CHECK(rep.xi_min <= rep.xi_max);
    CHECK(rep.K == r.K);
  }
}

TEST_CASE("shallow_well_xi scales as K^2 and with Z") {
  const auto f = field(1e8);
  const auto eps = mf::permittivity(f, mf::PermittivityModel::full);
  const double a = shallow_well_xi(f, 0, 1, eps, 0.5, 1.0);
  const double b = shallow_well_xi(f, 0, 1, eps, 0.5, 2.0);
  CHECK(b == doctest::Approx(4.0 * a).epsilon(1e-12));
  const double c = shallow_well_xi(f, 0, 2, eps, 0.5, 1.0);
  CHECK(c == doctest::Approx(2.0 * a).epsilon(1e-12));
  CHECK(a > 0.0);
}

TEST_CASE("coulomb_ratio: frozen probes and bounds") {
  const auto f = field(1e5);
  const auto eps = mf::permittivity(f, mf::PermittivityModel::full);
  CHECK(coulomb_ratio(f, 0, 1.5, eps) == doctest::Approx(0.9316).epsilon(2e-3));
  CHECK(coulomb_ratio(f, 0, 2.0, eps) == doctest::Approx(0.9584).epsilon(2e-3));
  CHECK(coulomb_ratio(f, 1, 1.5, eps) == doctest::Approx(0.8745).epsilon(2e-3));
  CHECK(coulomb_ratio(f, 1, 2.0, eps) == doctest::Approx(0.9213).epsilon(2e-3));
  CHECK(coulomb_ratio(f, 2, 1.5, eps) == doctest::Approx(0.8262).epsilon(2e-3));
  CHECK(coulomb_ratio(f, 2, 2.0, eps) == doctest::Approx(0.8879).epsilon(2e-3));
  CHECK(coulomb_ratio(f, 3, 1.5, eps) == doctest::Approx(0.7847).epsilon(2e-3));
  CHECK(coulomb_ratio(f, 3, 2.0, eps) == doctest::Approx(0.8578).epsilon(2e-3));
}

TEST_CASE("coulomb_ratio in (0,1), increasing in zeta, to 1 at infinity") {
  const auto f = field(1e7);
  const auto eps = mf::permittivity(f, mf::PermittivityModel::full);
  double prev = 0.0;
  for (int i = 1; i <= 60; ++i) {
    const double z = 0.1 * i;
    const double r = coulomb_ratio(f, 1, z, eps);
    CHECK(r > 0.0);
    CHECK(r < 1.0);
    CHECK(r > prev);
    prev = r;
  }
  CHECK(coulomb_ratio(f, 1, 100.0, eps) > 0.999);
}

TEST_CASE("coulomb_ratio increases with field on a log grid") {
  for (int m = 0; m <= 3; ++m) {
    double prev = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double calB = std::pow(10.0, 5.0 + 4.0 * i / 19.0);
      const auto f = field(calB);
      const auto eps = mf::permittivity(f, mf::PermittivityModel::full);
      const double r = coulomb_ratio(f, m, 1.5, eps);
      CHECK(r > prev);
      prev = r;
    }
  }
}

TEST_CASE("adiabatic parameter: frozen endpoints and scaling") {
  {
    const auto f = mf::field_from(1.0, mf::FieldUnit::b);
    const auto eps = mf::permittivity(f, mf::PermittivityModel::full);
    CHECK(adiabatic_parameter(f, eps, 1.5) ==
          doctest::Approx(0.4446).epsilon(2e-3));
  }
  {
    const auto f = mf::field_from(1e5, mf::FieldUnit::b);
    const auto eps = mf::permittivity(f, mf::PermittivityModel::full);
    CHECK(adiabatic_parameter(f, eps, 1.5) ==
          doctest::Approx(3.512e-4).epsilon(2e-3));
  }
  // 1/zeta^2 scaling
  const auto f = field(1e8);
  const auto eps = mf::permittivity(f, mf::PermittivityModel::full);
  CHECK(adiabatic_parameter(f, eps, 2.0) ==
        doctest::Approx(0.25 * adiabatic_parameter(f, eps, 1.0))
            .epsilon(1e-12));
}

TEST_CASE("verdicts") {
  // moderate field, short support: shallow but not Coulombian everywhere
  const auto marginal =
      validity_report(field(1e5), 0, 1, 1.5, mf::PermittivityModel::full);
  CHECK(marginal.verdict != Verdict::violated);

  // strong field, wide support: Xi up to ~2.9 -> violated
  const auto bad =
      validity_report(field(1e9), 0, 1, 3.0, mf::PermittivityModel::full);
  CHECK(bad.verdict == Verdict::violated);
  CHECK(bad.xi_max > 1.0);

  // the report never throws on extreme K; a vanishing probe ratio
  // means the well is nowhere Coulombian, which counts as violated
  const auto tiny =
      validity_report(field(1e8), 0, 1, 1e-3, mf::PermittivityModel::full);
  CHECK(tiny.xi_max < 0.1);
  CHECK(tiny.ratio_at_probe < 0.45);
  CHECK(tiny.verdict == Verdict::violated);
}

TEST_CASE("thresholds are configurable") {
  ValidityThresholds lax;
  lax.xi_shallow = 10.0;
  lax.ratio_coulomb = 0.0;
  const auto rep = validity_report(field(1e9), 0, 1, 3.0,
                                   mf::PermittivityModel::full, lax);
  CHECK(rep.verdict == Verdict::ok);
}
