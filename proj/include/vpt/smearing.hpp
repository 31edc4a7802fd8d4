#pragma once

#include <functional>

#include "vpt/common.hpp"
#include "vpt/numerics.hpp"

namespace vpt {
namespace smearing {

struct SmearedCoulomb {
  double value;
  double est_abs_error;
};

// Anisotropic Gaussian convolution of an arbitrary potential, centered at x0
// with transverse variance a_perp_sq (x and y) and longitudinal variance
// a_par_sq. Adaptive 3D cubature over +-8 sigma per axis. `splits` marks
// coordinates (absolute) where the potential is non-smooth, e.g. {0,0,0} for
// the Coulomb kernel.
QuadResult smear_potential(const FluctuationWidths& widths, double x0, double y0,
                           double z0,
                           const std::function<double(double, double, double)>& potential,
                           double rel_tol = 1e-8,
                           const std::array<std::vector<double>, 3>& splits = {});

// <-1/|x|> by the 1D integral representation; adaptive quadrature on [0,1].
SmearedCoulomb coulomb_expectation(const FluctuationWidths& widths,
                                   const Position& x0, double rel_tol = 1e-10);

// T(u) = arctan(sqrt(u-1))/sqrt(u-1) for u > 1, artanh(sqrt(1-u))/sqrt(1-u)
// for u < 1, analytic through u = 1.
double shape_integral(double u);

// Zero-temperature <-1/|x|> at the origin for trial frequencies
// (perp2, par); closed form, real in all three regimes of 2 par vs perp2.
double coulomb_expectation_zero_t(double omega_perp2, double omega_par);

}  // namespace smearing
}  // namespace vpt
