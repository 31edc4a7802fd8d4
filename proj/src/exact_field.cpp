#include "vpt/exact_field.hpp"

#include <cmath>

#include "vpt/effective_potential.hpp"
#include "vpt/greens.hpp"

namespace vpt {
namespace exact_field {

double exact_veff(const ThermoState& state) {
  return effective_potential::w1_asymptote(state);
}

ExactFieldResult exact_field_result(const ThermoState& state) {
  ExactFieldResult r;
  r.v_eff = exact_veff(state);
  r.log_z_per_area = -greens::log_sinh_ratio(0.5 * state.beta * state.cyclotron());
  return r;
}

double exact_hamiltonian(const ThermoState& state, double p0x, double p0y,
                         double x0, double y0) {
  const double wc = state.cyclotron();
  return exact_veff(state) + 0.5 * (p0x * p0x + p0y * p0y) -
         0.5 * wc * (x0 * p0y - y0 * p0x) + 0.125 * wc * wc * (x0 * x0 + y0 * y0);
}

std::pair<double, double> regulator_frequencies(double omega_c, double omega_reg) {
  if (omega_c < 0.0 || omega_reg < 0.0)
    throw std::invalid_argument("regulator_frequencies: inputs must be >= 0");
  const double s = std::sqrt(omega_reg * omega_reg + 0.25 * omega_c * omega_c);
  const double w2 = omega_reg * omega_reg + 0.5 * omega_c * omega_c;
  const double plus = std::sqrt(w2 + omega_c * s);
  const double minus_sq = w2 - omega_c * s;
  return {plus, std::sqrt(std::max(minus_sq, 0.0))};
}

}  // namespace exact_field
}  // namespace vpt
