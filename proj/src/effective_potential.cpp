#include "vpt/effective_potential.hpp"

#include <future>

#include "vpt/greens.hpp"
#include "vpt/optimizer.hpp"
#include "vpt/smearing.hpp"

namespace vpt {
namespace effective_potential {

W1Terms w1_terms(const ThermoState& state, const FrequencyTriple& omega,
                 const Position& x0, bool coulomb_enabled) {
  const double wc = state.cyclotron();
  const auto widths = greens::fluctuation_widths(state, omega);
  W1Terms t;
  t.trial_free_energy = -greens::trial_log_partition(state, omega) / state.beta;
  t.cross = (wc - omega.perp1) * widths.b_perp_sq;
  t.quad_perp = -0.25 * (omega.perp2 * omega.perp2 - wc * wc) * widths.a_perp_sq;
  t.quad_par = -0.5 * omega.par * omega.par * widths.a_par_sq;
  t.coulomb = 0.0;
  if (coulomb_enabled) {
    auto c = smearing::coulomb_expectation(widths, x0);
    t.coulomb = c.value;
  }
  return t;
}

double w1(const ThermoState& state, const FrequencyTriple& omega,
          const Position& x0, bool coulomb_enabled) {
  return w1_terms(state, omega, x0, coulomb_enabled).total();
}

double w1_asymptote(const ThermoState& state) {
  if (!(state.beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  return greens::log_sinh_ratio(0.5 * state.beta * state.cyclotron()) / state.beta;
}

std::vector<PotentialSample> potential_curve(const ThermoState& state, Axis axis,
                                             const std::vector<double>& r_values,
                                             const OptimizerConfig& cfg, int jobs) {
  std::vector<PotentialSample> out(r_values.size());
  auto position = [&](double r) {
    return axis == Axis::kTransverse ? Position{r, 0.0} : Position{0.0, r};
  };
  auto fill = [&](size_t i, const std::optional<FrequencyTriple>& warm) {
    auto res = optimizer::minimize_w1(state, position(r_values[i]), cfg, true, warm);
    PotentialSample s;
    s.r = r_values[i];
    s.axis = axis;
    s.w1 = res.value;
    s.omega_opt = res.omega_opt;
    s.converged = res.converged;
    return s;
  };
  if (jobs <= 1) {
    std::optional<FrequencyTriple> warm;
    for (size_t i = 0; i < r_values.size(); ++i) {
      out[i] = fill(i, warm);
      if (out[i].converged) warm = out[i].omega_opt;
    }
  } else {
    // bounded fan-out; each point is computed independently of its neighbors
    size_t next = 0;
    auto worker = [&fill](size_t i) { return fill(i, std::nullopt); };
    std::vector<std::pair<size_t, std::future<PotentialSample>>> inflight;
    while (next < r_values.size() || !inflight.empty()) {
      while (next < r_values.size() && static_cast<int>(inflight.size()) < jobs) {
        inflight.emplace_back(next, std::async(std::launch::async, worker, next));
        ++next;
      }
      auto& front = inflight.front();
      out[front.first] = front.second.get();
      inflight.erase(inflight.begin());
    }
  }
  return out;
}

}  // namespace effective_potential
}  // namespace vpt
