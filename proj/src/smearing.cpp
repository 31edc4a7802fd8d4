#include "vpt/smearing.hpp"

#include <cmath>

namespace vpt {
namespace smearing {

QuadResult smear_potential(const FluctuationWidths& widths, double x0, double y0,
                           double z0,
                           const std::function<double(double, double, double)>& potential,
                           double rel_tol,
                           const std::array<std::vector<double>, 3>& splits) {
  const double ap2 = widths.a_perp_sq, al2 = widths.a_par_sq;
  if (!(ap2 > 0.0) || !(al2 > 0.0))
    throw std::invalid_argument("smear_potential: widths must be positive");
  const double sp = std::sqrt(ap2), sl = std::sqrt(al2);
  const double norm = 1.0 / (std::pow(2.0 * M_PI, 1.5) * ap2 * sl);
  auto f = [&](double x, double y, double z) {
    const double ex = (x - x0) * (x - x0) + (y - y0) * (y - y0);
    const double ez = (z - z0) * (z - z0);
    return potential(x, y, z) * std::exp(-0.5 * ex / ap2 - 0.5 * ez / al2);
  };
  const std::array<double, 3> lo = {x0 - 8.0 * sp, y0 - 8.0 * sp, z0 - 8.0 * sl};
  const std::array<double, 3> hi = {x0 + 8.0 * sp, y0 + 8.0 * sp, z0 + 8.0 * sl};
  auto r = integrate_box3(f, lo, hi, rel_tol, splits);
  r.value *= norm;
  r.abs_error *= norm;
  return r;
}

SmearedCoulomb coulomb_expectation(const FluctuationWidths& widths,
                                   const Position& x0, double rel_tol) {
  const double ap2 = widths.a_perp_sq, al2 = widths.a_par_sq;
  if (ap2 == 0.0 && al2 == 0.0) {
    // Classical (delta-function) limit of the Gaussian.
    const double r = x0.r();
    if (r == 0.0)
      throw std::domain_error("coulomb_expectation: widths -> 0 at the origin");
    return {-1.0 / r, 0.0};
  }
  if (!(ap2 > 0.0) || !(al2 > 0.0))
    throw std::invalid_argument("coulomb_expectation: widths must be positive");
  const double rho2 = x0.rho * x0.rho, z2 = x0.z * x0.z;
  auto integrand = [&](double xi) {
    const double xi2 = xi * xi;
    const double den = al2 + xi2 * (ap2 - al2);
    return std::exp(-0.5 * xi2 * (rho2 / den + z2 / al2)) / den;
  };
  auto q = integrate(integrand, 0.0, 1.0, rel_tol, 1e-300);
  const double pref = std::sqrt(2.0 * al2 / M_PI);
  return {-pref * q.value, pref * q.abs_error};
}

double shape_integral(double u) {
  const double d = u - 1.0;
  if (std::abs(d) < 1e-6) {
    // arctan/artanh series around the isotropic point
    return 1.0 - d / 3.0 + d * d / 5.0 - d * d * d / 7.0;
  }
  if (d > 0.0) {
    const double s = std::sqrt(d);
    return std::atan(s) / s;
  }
  const double s = std::sqrt(-d);
  return std::atanh(s) / s;
}

double coulomb_expectation_zero_t(double omega_perp2, double omega_par) {
  if (!(omega_perp2 > 0.0) || !(omega_par > 0.0))
    throw std::invalid_argument("coulomb_expectation_zero_t: frequencies must be > 0");
  // Ground-state widths a_perp^2 = 1/perp2, a_par^2 = 1/(2 par); the 1D
  // integral at the origin evaluates to sqrt(2/(pi a_par^2)) T(a_perp^2/a_par^2).
  const double u = 2.0 * omega_par / omega_perp2;
  return -2.0 * std::sqrt(omega_par / M_PI) * shape_integral(u);
}

}  // namespace smearing
}  // namespace vpt
