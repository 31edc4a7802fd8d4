#pragma once

#include <array>
#include <functional>
#include <vector>

namespace vpt {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // estimate
  bool converged = false;
  long n_evals = 0;
};

// Adaptive Gauss-Kronrod (G7/K15) quadrature on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 1e-14,
                     int max_depth = 60);

// Iterated adaptive cubature over an axis-aligned box. `splits[d]` lists
// interior coordinates where axis d is split into separate panels (used to
// isolate integrand kinks or singular lines at panel boundaries).
QuadResult integrate_box3(const std::function<double(double, double, double)>& f,
                          const std::array<double, 3>& lo,
                          const std::array<double, 3>& hi, double rel_tol,
                          const std::array<std::vector<double>, 3>& splits = {});

// Eigenvalues of a symmetric n x n matrix (n <= 3), ascending. `m` is row-major.
std::array<double, 3> sym_eigenvalues(const double* m, int n);

// Brent minimization on [a, b].
double brent_min(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_iter = 200);

}  // namespace vpt
