#pragma once

#include <optional>

#include "vpt/common.hpp"
#include "vpt/optimizer_types.hpp"

namespace vpt {
namespace optimizer {

// Optimize W1 over the trial frequencies at fixed (state, x0), following the
// physical branch of the stationarity conditions.
//
// On that branch perp1 = w_c exactly (checked numerically in the tests), so
// the solver works on the (perp2, par) slice with an active-set projected
// Newton. Isolated calls anchor at the x0 = 0 optimum and continue outward;
// sweeps pass `warm` to continue from a neighboring optimum. With the Coulomb
// term disabled the stationary solution is (w_c, w_c, 0) for every x0 and is
// returned after a Newton polish.
OptimizationResult minimize_w1(const ThermoState& state, const Position& x0,
                               const OptimizerConfig& cfg,
                               bool coulomb_enabled = true,
                               const std::optional<FrequencyTriple>& warm = {});

// Zero-temperature ground-state energy: minimize
//   E(perp2, par) = (perp2^2 + w_c^2)/(4 perp2) + par/4 - <1/|x|>_0
// over (perp2, par) > 0. perp1 does not enter; it is reported as 0.
// With the Coulomb term disabled E is linear in par; par clamps to 0 and the
// minimum is the zeroth Landau level w_c/2 at perp2 = w_c.
OptimizationResult minimize_ground_state(double b_field, const OptimizerConfig& cfg,
                                         bool coulomb_enabled = true);

// eps(B) = B/2 - E(B).
double binding_energy(double b_field, const OptimizerConfig& cfg);

// Extended-precision binding energy for series-scaling checks; the zero-T
// functional and the nested bracketing search evaluated in long double.
long double binding_energy_ld(long double b_field);

// The zero-T variational energy in the (eta = 2 par/perp2, Omega = perp2)
// variables, exposed for tests and the weak-field cross-checks.
double ground_state_energy(double b_field, double eta, double omega);

}  // namespace optimizer
}  // namespace vpt
