#pragma once

#include <vector>

#include "vpt/common.hpp"
#include "vpt/optimizer_types.hpp"

namespace vpt {
namespace effective_potential {

// Term-by-term breakdown of W1 at fixed trial frequencies.
struct W1Terms {
  double trial_free_energy;  // -(1/beta) ln Z_Omega
  double cross;              // (w_c - perp1) b_perp^2
  double quad_perp;          // -(1/4)(perp2^2 - w_c^2) a_perp^2
  double quad_par;           // -(1/2) par^2 a_par^2
  double coulomb;            // smeared Coulomb expectation (0 when disabled)
  double total() const {
    return trial_free_energy + cross + quad_perp + quad_par + coulomb;
  }
};

W1Terms w1_terms(const ThermoState& state, const FrequencyTriple& omega,
                 const Position& x0, bool coulomb_enabled = true);

// First-order effective classical potential at fixed trial frequencies.
double w1(const ThermoState& state, const FrequencyTriple& omega,
          const Position& x0, bool coulomb_enabled = true);

// Large-distance constant (1/beta) ln[sinh(beta w_c/2)/(beta w_c/2)].
double w1_asymptote(const ThermoState& state);

enum class Axis { kTransverse, kLongitudinal };

struct PotentialSample {
  double r = 0.0;
  Axis axis = Axis::kTransverse;
  double w1 = 0.0;
  FrequencyTriple omega_opt;
  bool converged = false;
};

// Optimized W1 along one axis. Serial mode warm-starts each point from the
// previous optimum; parallel mode (jobs > 1) runs points independently, each
// anchored by its own continuation from the origin, so results do not depend
// on scheduling.
std::vector<PotentialSample> potential_curve(const ThermoState& state, Axis axis,
                                             const std::vector<double>& r_values,
                                             const OptimizerConfig& cfg,
                                             int jobs = 1);

}  // namespace effective_potential
}  // namespace vpt
