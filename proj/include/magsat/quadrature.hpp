#pragma once

//! Adaptive Gauss-Kronrod (15/7) quadrature on a finite interval.
//! Panels are bisected until the embedded error estimate meets the
//! requested tolerance.

#include <functional>
#include <stdexcept>

namespace magsat::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0; // estimated absolute error
  bool converged = false;
};

//! Thrown when panel subdivision exhausts its budget before the
//! tolerance is met. Carries the achieved error estimate.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string &msg, QuadResult partial)
      : std::runtime_error(msg), partial_(partial) {}
  const QuadResult &partial() const { return partial_; }

private:
  QuadResult partial_;
};

//! Integrate f over [lo, hi]; stops when the summed error estimate is
//! below max(abs_tol, rel_tol * |integral|). Throws QuadratureError on
//! non-convergence.
QuadResult integrate(const std::function<double(double)> &f, double lo,
                     double hi, double rel_tol = 1e-10,
                     double abs_tol = 1e-300, int max_panels = 4096);

} // namespace magsat::quad
