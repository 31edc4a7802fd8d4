#pragma once

#include "vpt/common.hpp"

namespace vpt {
namespace greens {

// ln(sinh(x)/x), continued to 0 at x = 0; overflow-safe for large x.
double log_sinh_ratio(double x);

// Subtracted equal-time oscillator width u(W) = (1/(beta W^2)) [ (beta W/2) coth(beta W/2) - 1 ]
// and its derivative du/dW. Smooth through W = 0 where u = beta/12.
double osc_width(double beta, double w);
double osc_width_deriv(double beta, double w);

// v(W) = (W/2) coth(beta W/2) and dv/dW; v(0) = 1/beta.
double half_coth(double beta, double w);
double half_coth_deriv(double beta, double w);

DerivedFrequencies derived_frequencies(const FrequencyTriple& omega);

// ln Z_Omega^{p0,x0}: sum over {Omega_+, Omega_-, Omega_par} of ln[(beta W/2)/sinh(beta W/2)].
double trial_log_partition(const ThermoState& state, const FrequencyTriple& omega);

FluctuationWidths fluctuation_widths(const ThermoState& state,
                                     const FrequencyTriple& omega);

// Spectral-sum oracle: raw partial sums over m = 1..m_max of the Fourier
// representation, with the same frequency substitutions. With
// `include_tail` an analytic O(1/m^2)+O(1/m^4) tail estimate is added.
FluctuationWidths matsubara_oracle_widths(const ThermoState& state,
                                          const FrequencyTriple& omega,
                                          long m_max, bool include_tail = true);

// beta -> infinity limits. Requires perp2 > 0 and par > 0 (the longitudinal
// width diverges for par = 0: unbound trial motion).
FluctuationWidths zero_temperature_widths(const FrequencyTriple& omega);

}  // namespace greens
}  // namespace vpt
