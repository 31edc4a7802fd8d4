#pragma once

#include <vector>

namespace vpt {
namespace weak_field {

// h(eta) = ln[(1-sqrt(1-eta))/(1+sqrt(1-eta))]/sqrt(1-eta), eta in (0, 1];
// removable limit h(1) = -2.
double h_function(double eta);

// eps^(1) = B/2 - (Omega/4)(1 + eta/2) - B^2/(4 Omega) - sqrt(eta Omega/(2 pi)) h(eta)
double weak_field_energy(double b_field, double eta, double omega);

struct SeriesCoefficients {
  int n;
  double eta_n;
  double omega_n;
  double eps_n;  // coefficient of B^{2n} in E(B) (eps(B) = B/2 - sum eps_n B^{2n})
};

// Solve the two stationarity conditions order by order in B^2 with truncated
// Taylor (jet) arithmetic around the B = 0 solution (eta0 = 1, Omega0 = 32/9pi).
std::vector<SeriesCoefficients> solve_series(int n_max);

struct ComparisonRow {
  int n;
  double eps_variational;
  double eps_exact;
};

// Variational eps_n next to the exact perturbation coefficients.
std::vector<ComparisonRow> compare_exact(int n_max);

}  // namespace weak_field
}  // namespace vpt
