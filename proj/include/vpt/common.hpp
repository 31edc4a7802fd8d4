#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Natural units throughout: hbar = M = e^2/4pi eps0 = k_B = c = 1.
// Energies in 2 Ryd, lengths in Bohr radii, fields in units of B0,
// inverse temperatures in 1/(2 Ryd).
namespace vpt {

inline constexpr const char* kVersion = "0.1.0";

// SI equivalents of the natural units, used only at output boundaries.
inline constexpr double kFieldUnitTesla = 2.35e5;
inline constexpr double kEnergyUnitEv = 27.21;
inline constexpr double kTemperatureUnitKelvin = 3.16e5;

struct ThermoState {
  double beta;     // inverse temperature, > 0
  double b_field;  // magnetic field strength B >= 0; cyclotron frequency w_c = B

  double cyclotron() const { return b_field; }
};

inline ThermoState make_state(double beta, double b_field) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (!(b_field >= 0.0)) throw std::invalid_argument("B must be >= 0");
  return ThermoState{beta, b_field};
}

// Trial frequencies (Omega_perp1, Omega_perp2, Omega_par), all >= 0.
struct FrequencyTriple {
  double perp1 = 0.0;
  double perp2 = 0.0;
  double par = 0.0;
};

// Auxiliary frequencies Omega_pm = |perp1 +- perp2| / 2 and the oscillator
// parameter Omega^2 = (perp2^2 - perp1^2) / 4.
struct DerivedFrequencies {
  double plus;
  double minus;
  double omega_sq;
};

// Equal-time correlators of the trial system. The off-diagonal xy position
// correlator vanishes identically by antisymmetry and is not an output.
struct FluctuationWidths {
  double a_perp_sq;  // <x~ x~>
  double a_par_sq;   // <z~ z~>
  double b_perp_sq;  // mixed position-momentum combination entering W1
};

// Position in the axially symmetric problem.
struct Position {
  double rho = 0.0;  // sqrt(x0^2 + y0^2) >= 0
  double z = 0.0;

  double r() const { return std::sqrt(rho * rho + z * z); }
};

}  // namespace vpt
