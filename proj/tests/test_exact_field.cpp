#include <cmath>
#include <random>

#include "doctest.h"
#include "vpt/effective_potential.hpp"
#include "vpt/exact_field.hpp"

using namespace vpt;
using namespace vpt::exact_field;

TEST_CASE("exact effective potential") {
  CHECK(exact_veff({1.0, 0.0}) == doctest::Approx(0.0));
  CHECK(exact_veff({1.0, 2.0}) == doctest::Approx(0.16143936157119563).epsilon(1e-14));
  for (double beta : {0.2, 1.0, 50.0})
    for (double b : {0.0, 0.7, 3.0, 200.0}) {
      const ThermoState st{beta, b};
      CHECK(exact_veff(st) == effective_potential::w1_asymptote(st));
    }
}

TEST_CASE("partition function per unit area") {
  const ThermoState st{1.0, 2.0};
  auto r = exact_field_result(st);
  CHECK(r.log_z_per_area == doctest::Approx(std::log(1.0 / std::sinh(1.0))).epsilon(1e-13));
  CHECK(r.log_z_per_area == doctest::Approx(-st.beta * r.v_eff).epsilon(1e-13));
}

TEST_CASE("effective hamiltonian") {
  const ThermoState st{1.0, 2.0};
  CHECK(exact_hamiltonian(st, 0, 0, 0, 0) == doctest::Approx(exact_veff(st)));
  // w_c -> 0: free particle
  const ThermoState free_st{1.0, 0.0};
  CHECK(exact_hamiltonian(free_st, 0.3, -0.4, 5.0, 7.0) ==
        doctest::Approx(0.5 * (0.09 + 0.16)).epsilon(1e-14));
}

TEST_CASE("regulator frequencies") {
  auto [p0, m0] = regulator_frequencies(2.0, 0.0);
  CHECK(p0 == doctest::Approx(2.0));
  CHECK(m0 == doctest::Approx(0.0));

  auto [p1, m1] = regulator_frequencies(0.0, 1.3);
  CHECK(p1 == doctest::Approx(1.3));
  CHECK(m1 == doctest::Approx(1.3));

  auto [p2, m2] = regulator_frequencies(2.0, 1.0);
  CHECK(p2 == doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-14));
  CHECK(m2 == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uni(0.0, 5.0);
  for (int k = 0; k < 30; ++k) {
    const double wc = uni(rng), om = uni(rng);
    auto [p, m] = regulator_frequencies(wc, om);
    CHECK(p * m == doctest::Approx(om * om).epsilon(1e-9));
    CHECK(p * p + m * m == doctest::Approx(2 * om * om + wc * wc).epsilon(1e-12));
  }
}
