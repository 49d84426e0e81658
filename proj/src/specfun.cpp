#include "magsat/specfun.hpp"
#include "magsat/quadrature.hpp"

#include <cmath>
#include <limits>

namespace magsat::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

// B_2 ... B_16
constexpr double kBernoulli[8] = {
    1.0 / 6.0,  -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0,  7.0 / 6.0,  -3617.0 / 510.0};

bool near_nonpositive_integer(double x) {
  return x <= 0.5 && std::abs(x - std::round(x)) < 1e-12;
}

// Stirling tail sum_{j} B_2j / (2j(2j-1) x^(2j-1)), valid for x >= 12.
double stirling_series(double x) {
  const double x2 = x * x;
  double xp = x;
  double s = 0.0;
  for (int j = 1; j <= 8; ++j) {
    s += kBernoulli[j - 1] / (2 * j * (2 * j - 1) * xp);
    xp *= x2;
  }
  return s;
}

} // namespace

double ln_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("ln_gamma: requires x > 0");
  double shift = 0.0;
  double y = x;
  while (y < 12.0) {
    shift -= std::log(y);
    y += 1.0;
  }
  const double core =
      (y - 0.5) * std::log(y) - y + 0.5 * std::log(2.0 * kPi);
  return core + stirling_series(y) + shift;
}

double digamma(double x) {
  if (near_nonpositive_integer(x))
    throw std::domain_error("digamma: pole at non-positive integer");
  if (x < 0.5)
    return digamma(1.0 - x) - kPi / std::tan(kPi * x);
  double shift = 0.0;
  double y = x;
  while (y < 12.0) {
    shift -= 1.0 / y;
    y += 1.0;
  }
  // psi(y) = ln y - 1/2y - sum_j B_2j / (2j y^2j)
  const double y2 = y * y;
  double yp = y2;
  double tail = 0.0;
  for (int j = 1; j <= 8; ++j) {
    tail += kBernoulli[j - 1] / (2 * j * yp);
    yp *= y2;
  }
  return std::log(y) - 0.5 / y - tail + shift;
}

double kummer_m(double a, double c, double x) {
  if (near_nonpositive_integer(c))
    throw std::domain_error("kummer_m: c is a non-positive integer");
  if (x < 0.0)
    throw std::domain_error("kummer_m: requires x >= 0");
  const bool terminating = near_nonpositive_integer(a) || a == 0.0;
  const int n_max =
      terminating ? static_cast<int>(std::lround(-a)) : 10000;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < n_max; ++n) {
    term *= (a + n) * x / ((c + n) * (n + 1));
    sum += term;
    if (!terminating && std::abs(term) < 1e-17 * std::abs(sum) && n > 2)
      break;
  }
  return sum;
}

double erfcx(double t) {
  if (t * t < 650.0)
    return std::exp(t * t) * std::erfc(t);
  // asymptotic: 1/(t sqrt(pi)) sum_n (-1)^n (2n-1)!! / (2 t^2)^n
  const double inv2t2 = 0.5 / (t * t);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 40; ++n) {
    term *= -(2 * n - 1) * inv2t2;
    sum += term;
    if (std::abs(term) < 1e-18)
      break;
  }
  return sum / (t * kSqrtPi);
}

namespace {

// Half-integer order k of c = 1/2 - k; throws outside the family.
int tricomi_order(double a, double c) {
  if (std::abs(a - 0.5) > 1e-12)
    throw std::domain_error("tricomi_u: only a = 1/2 is supported");
  if (std::abs(c - std::round(c)) < 1e-12)
    throw std::domain_error(
        "tricomi_u: integer c (logarithmic case) is not supported");
  const double kf = 0.5 - c;
  const int k = static_cast<int>(std::lround(kf));
  if (std::abs(kf - k) > 1e-12 || k < 0)
    throw std::domain_error("tricomi_u: c must be 1/2 - k, k = 0,1,2,...");
  return k;
}

// U(1/2, 1/2 - k; x) by upward recurrence in k, seeded by
// U(1/2, 3/2; x) = x^(-1/2) and U(1/2, 1/2; x) = sqrt(pi) erfcx(sqrt(x)).
double tricomi_recurrence(int k, double x) {
  double fm1 = 1.0 / std::sqrt(x);
  double f0 = kSqrtPi * erfcx(std::sqrt(x));
  for (int j = 1; j <= k; ++j) {
    const double fj = ((j - 0.5 - x) * f0 + x * fm1) / j;
    fm1 = f0;
    f0 = fj;
  }
  return f0;
}

// Poincare expansion U(a,c;x) ~ x^-a sum_n (a)_n (a-c+1)_n / (n! (-x)^n),
// truncated at the smallest term. Returns NaN when the smallest term is
// too large for the requested accuracy.
double tricomi_asymptotic(int k, double x) {
  double term = 1.0;
  double sum = 1.0;
  double smallest = 1.0;
  for (int n = 0; n < 400; ++n) {
    const double next = term * -((n + 0.5) * (n + k + 1.0)) / ((n + 1) * x);
    if (std::abs(next) >= std::abs(term))
      break; // divergence sets in; truncate optimally
    term = next;
    sum += term;
    smallest = std::abs(term);
    if (smallest < 1e-18 * std::abs(sum))
      break;
  }
  if (smallest > 1e-11 * std::abs(sum))
    return std::numeric_limits<double>::quiet_NaN();
  return sum / std::sqrt(x);
}

} // namespace

double tricomi_u(double a, double c, double x) {
  const int k = tricomi_order(a, c);
  if (!(x > 0.0))
    throw std::domain_error("tricomi_u: requires x > 0");
  if (x > 40.0) {
    const double v = tricomi_asymptotic(k, x);
    if (std::isfinite(v))
      return v;
  }
  return tricomi_recurrence(k, x);
}

double tricomi_u_oracle(double a, double c, double x) {
  if (!(a > 0.0))
    throw std::domain_error("tricomi_u_oracle: requires a > 0");
  if (!(x > 0.0))
    throw std::domain_error("tricomi_u_oracle: requires x > 0");
  // Gamma(a) U(a,c;x) = int_0^inf e^{-xt} t^{a-1} (1+t)^{c-a-1} dt.
  // The substitution t = u^2 removes the endpoint singularity for a = 1/2.
  const double p = 2.0 * a - 1.0;
  const double q = c - a - 1.0;
  auto integrand = [&](double u) {
    return 2.0 * std::exp(-x * u * u + p * std::log(u) +
                          q * std::log1p(u * u));
  };
  // e^{-x u^2} tail; (1+u^2)^q only matters for q > 0, not in our family
  double u_max = std::sqrt(50.0 / x) + 1.0;
  if (q > 0.0)
    u_max += std::sqrt(std::max(0.0, q * std::log(u_max) / x));
  const auto r = quad::integrate(integrand, 0.0, u_max, 1e-11, 1e-300);
  return r.value * std::exp(-ln_gamma(a));
}

namespace {

// Euler-Maclaurin parameters shared by zeta and its s-derivative.
constexpr int kZetaShift = 20;
constexpr int kZetaBernoulli = 8;

} // namespace

double hurwitz_zeta(double s, double q) {
  if (!(q > 0.0))
    throw std::domain_error("hurwitz_zeta: requires q > 0");
  if (s == 1.0)
    throw std::domain_error("hurwitz_zeta: pole at s = 1");
  double sum = 0.0;
  for (int k = 0; k < kZetaShift; ++k)
    sum += std::pow(q + k, -s);
  const double a = q + kZetaShift;
  sum += std::pow(a, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(a, -s);
  // sum_j B_2j/(2j)! (s)_{2j-1} a^{-s-2j+1}
  double poch = s; // (s)_1
  double fact = 2.0;
  double ap = std::pow(a, -s - 1.0);
  const double a2 = a * a;
  for (int j = 1; j <= kZetaBernoulli; ++j) {
    sum += kBernoulli[j - 1] / fact * poch * ap;
    poch *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    ap /= a2;
  }
  return sum;
}

double hurwitz_zeta_sderiv_m1(double q) {
  if (!(q > 0.0))
    throw std::domain_error("hurwitz_zeta_sderiv_m1: requires q > 0");
  // term-by-term d/ds of the Euler-Maclaurin expansion, evaluated at s = -1
  double sum = 0.0;
  for (int k = 0; k < kZetaShift; ++k) {
    const double y = q + k;
    sum -= y * std::log(y);
  }
  const double a = q + kZetaShift;
  const double ln_a = std::log(a);
  sum += 0.25 * a * a * (2.0 * ln_a - 1.0); // d/ds a^{1-s}/(s-1)
  sum -= 0.5 * a * ln_a;                    // d/ds a^{-s}/2
  sum += (1.0 + ln_a) / 12.0;               // j = 1 Bernoulli term
  // j >= 2: the Pochhammer (s)_{2j-1} vanishes at s = -1; only its
  // derivative -(2j-3)! survives
  double ap = 1.0 / (a * a);
  for (int j = 2; j <= kZetaBernoulli; ++j) {
    sum -= kBernoulli[j - 1] * ap /
           ((2.0 * j - 2.0) * (2.0 * j - 1.0) * 2.0 * j);
    ap /= a * a;
  }
  return sum;
}

} // namespace magsat::specfun
