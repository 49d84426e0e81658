#pragma once

//! Real-valued special functions used throughout the library:
//! log-gamma, digamma, the confluent hypergeometric pair M (Kummer)
//! and U (Tricomi), the Hurwitz zeta function and its s-derivative
//! at s = -1.
//!
//! Only the parameter families the physics needs are supported.
//! Unsupported (a, c) combinations throw instead of silently
//! returning an approximation.

#include <stdexcept>

namespace magsat::specfun {

//! Tolerance pair carried by routines that estimate their own error.
struct FunctionAccuracy {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
};

//! ln Gamma(x) for x > 0. Relative error <= 1e-12.
double ln_gamma(double x);

//! Digamma psi(x). Poles at non-positive integers throw.
//! Negative arguments are handled via the reflection formula.
double digamma(double x);

//! Kummer's function M(a, c; x) by direct power series.
//! Exact (terminating) when a is a non-positive integer.
double kummer_m(double a, double c, double x);

//! Tricomi's function U(a, c; x) for a = 1/2 and c = 1/2 - k,
//! k = 0, 1, 2, ... (the family appearing in Landau-averaged
//! potentials). Positive and strictly decreasing in x.
//! Integer c (the logarithmic case) is rejected.
double tricomi_u(double a, double c, double x);

//! Independent evaluation of U(a, c; x) through the Laplace integral
//! representation, by adaptive quadrature. Requires a > 0, x > 0.
//! Used as a cross-check of tricomi_u; never called by it.
double tricomi_u_oracle(double a, double c, double x);

//! Hurwitz zeta(s, q), s != 1, q > 0, by Euler-Maclaurin summation.
double hurwitz_zeta(double s, double q);

//! d/ds zeta(s, q) at s = -1, q > 0, from the term-by-term
//! s-differentiated Euler-Maclaurin expansion.
double hurwitz_zeta_sderiv_m1(double q);

//! Scaled complementary error function exp(t^2) erfc(t), t >= 0.
//! U(1/2, 1/2; x) = sqrt(pi) * erfcx(sqrt(x)).
double erfcx(double t);

} // namespace magsat::specfun
