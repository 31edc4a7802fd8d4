#pragma once

#include <utility>

#include "vpt/common.hpp"

namespace vpt {
namespace exact_field {

struct ExactFieldResult {
  double v_eff;           // constant effective classical potential
  double log_z_per_area;  // ln of Z / (A / lambda_th^2)
};

// V_eff = (1/beta) ln[sinh(beta w_c/2)/(beta w_c/2)]; identical code path to
// w1_asymptote.
double exact_veff(const ThermoState& state);

ExactFieldResult exact_field_result(const ThermoState& state);

// H_eff = V_eff + p0^2/2 - (w_c/2)(x0 p0y - y0 p0x) + (w_c^2/8)(x0^2 + y0^2)
double exact_hamiltonian(const ThermoState& state, double p0x, double p0y,
                         double x0, double y0);

// Omega_pm = sqrt(Omega^2 + w_c^2/2 +- w_c sqrt(Omega^2 + w_c^2/4)) for the
// infrared-regulated pure-field system.
std::pair<double, double> regulator_frequencies(double omega_c, double omega_reg);

}  // namespace exact_field
}  // namespace vpt
