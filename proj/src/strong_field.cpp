#include "vpt/strong_field.hpp"

#include <cmath>
#include <stdexcept>

namespace vpt {
namespace strong_field {

AsymptoticConstants asymptotic_constants() {
  return {2.0 - std::log(2.0), std::log(M_PI / 2.0) - 2.0};
}

double strong_field_functional(double b_field, double omega_perp, double omega_par) {
  if (!(b_field > 0.0) || !(omega_perp > 0.0) || !(omega_par > 0.0))
    throw std::invalid_argument("strong_field_functional: inputs must be > 0");
  return 0.5 * b_field -
         (0.25 * omega_perp + b_field * b_field / (4.0 * omega_perp) +
          0.25 * omega_par +
          std::sqrt(omega_par / M_PI) * std::log(omega_par / (2.0 * omega_perp)));
}

double iterate_omega_par(double b_field, int n_iter) {
  const double L = std::log(2.0 * b_field) - 2.0;  // ln(2 B e^-2)
  if (!(L > 0.0))
    throw std::invalid_argument("iterate_omega_par: requires B > e^2/2");
  if (n_iter < 1) throw std::invalid_argument("iterate_omega_par: n_iter >= 1");
  const double c = 2.0 / std::sqrt(M_PI);
  double y = c * L;
  for (int k = 2; k <= n_iter; ++k) {
    y = c * (L - 2.0 * std::log(y));
    if (!(y > 0.0))
      throw std::runtime_error("iterate_omega_par: iteration left the domain");
  }
  return y * y;
}

AsymptoticBreakdown asymptotic_binding_energy(double b_field) {
  if (!(std::log(b_field) > 2.0))
    throw std::invalid_argument("asymptotic_binding_energy: requires B > e^2");
  const double b = asymptotic_constants().b;
  const double L = std::log(b_field);
  const double LL = std::log(L);
  AsymptoticBreakdown r;
  r.terms = {L * L / M_PI,
             -4.0 * L * LL / M_PI,
             4.0 * LL * LL / M_PI,
             -4.0 * b * LL / M_PI,
             2.0 * (b + 2.0) * L / M_PI,
             b * b / M_PI};
  r.six_term_sum = 0.0;
  for (double t : r.terms) r.six_term_sum += t;
  r.correction = -(8.0 * LL * LL - 8.0 * b * LL + 2.0 * b * b) / (M_PI * L);
  r.total = r.six_term_sum + r.correction;
  return r;
}

double landau_estimate(double b_field) {
  if (!(b_field > 1.0)) throw std::invalid_argument("landau_estimate: requires B > 1");
  const double L = std::log(b_field);
  return 0.5 * L * L;
}

}  // namespace strong_field
}  // namespace vpt
