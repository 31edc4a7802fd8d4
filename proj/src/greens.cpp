#include "vpt/greens.hpp"

#include <cmath>

namespace vpt {
namespace greens {

double log_sinh_ratio(double x) {
  x = std::abs(x);
  if (x < 1e-4) {
    const double x2 = x * x;
    return x2 / 6.0 - x2 * x2 / 180.0;
  }
  if (x > 20.0) return x - std::log(2.0 * x) + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x) / x);
}

double osc_width(double beta, double w) {
  const double x = 0.5 * beta * w;
  if (x < 1e-4) {
    const double b3 = beta * beta * beta;
    return beta / 12.0 - b3 * w * w / 720.0 + b3 * beta * beta * w * w * w * w / 30240.0;
  }
  return (x / std::tanh(x) - 1.0) / (beta * w * w);
}

double osc_width_deriv(double beta, double w) {
  const double x = 0.5 * beta * w;
  if (x < 1e-4) {
    const double b3 = beta * beta * beta;
    return -b3 * w / 360.0 + b3 * beta * beta * w * w * w / 7560.0;
  }
  // u = c/(2w) - 1/(beta w^2) with c = coth(x);  dc/dw = (beta/2)(1 - c^2)
  const double c = 1.0 / std::tanh(x);
  return -c / (2.0 * w * w) + (beta / 4.0) * (1.0 - c * c) / w +
         2.0 / (beta * w * w * w);
}

double half_coth(double beta, double w) {
  const double x = 0.5 * beta * w;
  if (x < 1e-4) return (1.0 + x * x / 3.0 - x * x * x * x / 45.0) / beta;
  return 0.5 * w / std::tanh(x);
}

double half_coth_deriv(double beta, double w) {
  const double x = 0.5 * beta * w;
  if (x < 1e-4) return beta * w / 6.0 - beta * beta * beta * w * w * w / 180.0;
  const double c = 1.0 / std::tanh(x);
  return 0.5 * c + 0.25 * beta * w * (1.0 - c * c);
}

DerivedFrequencies derived_frequencies(const FrequencyTriple& omega) {
  DerivedFrequencies d;
  d.plus = 0.5 * std::abs(omega.perp1 + omega.perp2);
  d.minus = 0.5 * std::abs(omega.perp1 - omega.perp2);
  d.omega_sq = 0.25 * (omega.perp2 * omega.perp2 - omega.perp1 * omega.perp1);
  return d;
}

double trial_log_partition(const ThermoState& state, const FrequencyTriple& omega) {
  if (!(state.beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  const auto d = derived_frequencies(omega);
  const double hb = 0.5 * state.beta;
  return -(log_sinh_ratio(hb * d.plus) + log_sinh_ratio(hb * d.minus) +
           log_sinh_ratio(hb * omega.par));
}

FluctuationWidths fluctuation_widths(const ThermoState& state,
                                     const FrequencyTriple& omega) {
  const double beta = state.beta;
  const double o1 = omega.perp1, o2 = omega.perp2;
  const auto d = derived_frequencies(omega);
  const double wp = d.plus, wm = d.minus;

  // Difference quotients of u and v across [wm, wp]; near degeneracy the
  // midpoint derivative avoids the coth-difference cancellation.
  double du, dv;
  if (wp - wm < 1e-5 * (wp + wm) || wp - wm < 1e-12) {
    const double mid = 0.5 * (wp + wm);
    du = osc_width_deriv(beta, mid);
    dv = half_coth_deriv(beta, mid);
  } else {
    du = (osc_width(beta, wp) - osc_width(beta, wm)) / (wp - wm);
    dv = (half_coth(beta, wp) - half_coth(beta, wm)) / (wp - wm);
  }
  // wp - wm = min(o1, o2) exactly, so (wp - wm)/o2 reduces to a clean ratio.
  const double ratio = (o1 <= o2) ? (o2 > 0.0 ? o1 / o2 : 0.0) : 1.0;

  FluctuationWidths w;
  w.a_perp_sq = osc_width(beta, wm) + wp * ratio * du;
  w.a_par_sq = osc_width(beta, omega.par);
  w.b_perp_sq = ratio * dv - 0.5 * o1 * w.a_perp_sq;
  if (!std::isfinite(w.a_perp_sq) || !std::isfinite(w.a_par_sq) ||
      !std::isfinite(w.b_perp_sq))
    throw std::runtime_error("fluctuation_widths: non-finite output");
  return w;
}

FluctuationWidths matsubara_oracle_widths(const ThermoState& state,
                                          const FrequencyTriple& omega,
                                          long m_max, bool include_tail) {
  const double beta = state.beta;
  const double o1 = omega.perp1, o2 = omega.perp2, op = omega.par;
  const double osq = 0.25 * (o2 * o2 - o1 * o1);
  double sum_a = 0.0, sum_b = 0.0, sum_p = 0.0;
  // Sum small terms first.
  for (long m = m_max; m >= 1; --m) {
    const double wm = 2.0 * M_PI * static_cast<double>(m) / beta;
    const double wm2 = wm * wm;
    const double den = wm2 * o1 * o1 + (wm2 + osq) * (wm2 + osq);
    sum_a += (wm2 + osq) / den;
    sum_b += wm2 / den;
    sum_p += 1.0 / (wm2 + op * op);
  }
  if (include_tail) {
    const double M = static_cast<double>(m_max);
    const double c2 = beta / (2.0 * M_PI);
    const double s2 = c2 * c2 * (1.0 / M - 0.5 / (M * M) + 1.0 / (6.0 * M * M * M));
    const double s4 = c2 * c2 * c2 * c2 *
                      (1.0 / (3.0 * M * M * M) - 0.5 / (M * M * M * M));
    const double sumsq = 0.5 * (o1 * o1 + o2 * o2);  // = W+^2 + W-^2
    sum_a += s2 + (osq - sumsq) * s4;
    sum_b += s2 - sumsq * s4;
    sum_p += s2 - op * op * s4;
  }
  FluctuationWidths w;
  w.a_perp_sq = 2.0 / beta * sum_a;
  w.a_par_sq = 2.0 / beta * sum_p;
  w.b_perp_sq = 2.0 * o1 / beta * sum_b - 0.5 * o1 * w.a_perp_sq;
  return w;
}

FluctuationWidths zero_temperature_widths(const FrequencyTriple& omega) {
  if (!(omega.perp2 > 0.0))
    throw std::invalid_argument("zero_temperature_widths: perp2 must be > 0");
  if (!(omega.par > 0.0))
    throw std::invalid_argument(
        "zero_temperature_widths: par must be > 0 (longitudinal width diverges)");
  FluctuationWidths w;
  // beta->inf: u(W) -> 1/(2W); the combination collapses to (1 - s)/(2 perp2)
  // with s = sign(perp1 - perp2), taking the perp1 <= perp2 side at equality.
  w.a_perp_sq = (omega.perp1 <= omega.perp2) ? 1.0 / omega.perp2 : 0.0;
  w.a_par_sq = 0.5 / omega.par;
  const double ratio = (omega.perp1 <= omega.perp2) ? omega.perp1 / omega.perp2 : 1.0;
  w.b_perp_sq = 0.5 * ratio - 0.5 * omega.perp1 * w.a_perp_sq;
  return w;
}

}  // namespace greens
}  // namespace vpt
