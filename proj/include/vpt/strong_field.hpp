#pragma once

#include <array>

namespace vpt {
namespace strong_field {

// a = 2 - ln 2, b = ln(pi/2) - 2.
struct AsymptoticConstants {
  double a;
  double b;
};
AsymptoticConstants asymptotic_constants();

// eps = B/2 - [W_perp/4 + B^2/(4 W_perp) + W_par/4 + sqrt(W_par/pi) ln(W_par/(2 W_perp))]
double strong_field_functional(double b_field, double omega_perp, double omega_par);

// Fixed-point iteration sqrt(W_par) <- (2/sqrt(pi)) [ln(2 B e^-2) - ln W_par],
// started from sqrt(W_par^(1)) = (2/sqrt(pi)) ln(2 B e^-2). Requires B > e^2/2.
double iterate_omega_par(double b_field, int n_iter);

struct AsymptoticBreakdown {
  std::array<double, 6> terms;  // Table-II column order
  double six_term_sum;
  double correction;  // the -1/(pi ln B) bracket
  double total;
};

// Six O(1) terms of the expanded binding energy plus the 1/ln B correction.
// Guarded at B > e^2, below which the expansion is meaningless.
AsymptoticBreakdown asymptotic_binding_energy(double b_field);

// eps_L(B) = ln^2(B)/2, the Landau-Lifschitz estimate. Requires B > 1.
double landau_estimate(double b_field);

}  // namespace strong_field
}  // namespace vpt
