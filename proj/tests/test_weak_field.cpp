#include <cmath>
#include <random>

#include "doctest.h"
#include "vpt/optimizer.hpp"
#include "vpt/weak_field.hpp"

using namespace vpt;
using namespace vpt::weak_field;

TEST_CASE("h function") {
  CHECK(h_function(1.0) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(h_function(0.75) == doctest::Approx(-2.1972245773362194).epsilon(1e-13));
  // logarithmic endpoint behaviour: h(eta) ~ ln(eta/4) as eta -> 0+
  const double eta = 1e-5;
  CHECK(h_function(eta) == doctest::Approx(std::log(eta / 4.0)).epsilon(2e-3));
  CHECK_THROWS_AS(h_function(0.0), std::invalid_argument);
  CHECK_THROWS_AS(h_function(1.1), std::invalid_argument);
}

TEST_CASE("weak-field energy expression") {
  CHECK(weak_field_energy(0.0, 1.0, 32.0 / (9.0 * M_PI)) ==
        doctest::Approx(4.0 / (3.0 * M_PI)).epsilon(1e-13));
  // equals w_c/2 - E under the variable substitution, on random points
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ue(0.2, 1.0), uo(0.3, 4.0), ub(0.0, 2.0);
  for (int k = 0; k < 20; ++k) {
    const double eta = ue(rng), om = uo(rng), b = ub(rng);
    CHECK(weak_field_energy(b, eta, om) ==
          doctest::Approx(0.5 * b - optimizer::ground_state_energy(b, eta, om))
              .epsilon(1e-12));
  }
}

TEST_CASE("series solve reproduces the closed forms") {
  auto s = solve_series(3);
  REQUIRE(s.size() == 4);
  CHECK(std::abs(s[0].eta_n - 1.0) < 1e-10);
  CHECK(s[0].omega_n == doctest::Approx(32.0 / (9.0 * M_PI)).epsilon(1e-12));
  CHECK(s[0].eps_n == doctest::Approx(-4.0 / (3.0 * M_PI)).epsilon(1e-12));
  CHECK(s[1].eta_n == doctest::Approx(-405.0 * M_PI * M_PI / 7168.0).epsilon(1e-12));
  CHECK(s[1].omega_n == doctest::Approx(99.0 * M_PI / 224.0).epsilon(1e-12));
  CHECK(s[1].eps_n == doctest::Approx(9.0 * M_PI / 128.0).epsilon(1e-12));
  CHECK(s[2].eta_n ==
        doctest::Approx(16828965.0 * std::pow(M_PI, 4) / 1258815488.0).epsilon(1e-12));
  CHECK(s[3].eps_n ==
        doctest::Approx(256449807.0 * std::pow(M_PI, 5) / 322256764928.0)
            .epsilon(1e-12));
  CHECK_THROWS_AS(solve_series(12), std::invalid_argument);
}

TEST_CASE("series matches the optimizer at small fields") {
  auto s = solve_series(3);
  OptimizerConfig cfg;
  const double b = 0.1;
  double trunc = 0.5 * b;
  double b2n = 1.0;
  for (int n = 0; n <= 3; ++n) {
    trunc -= s[n].eps_n * b2n;
    b2n *= b * b;
  }
  CHECK(std::abs(optimizer::binding_energy(b, cfg) - trunc) < 1e-7);
}

TEST_CASE("comparison against the exact perturbation coefficients") {
  auto rows = compare_exact(3);
  CHECK(rows[0].eps_exact == doctest::Approx(-0.5));
  CHECK(rows[0].eps_variational == doctest::Approx(-0.4244).epsilon(1e-3));
  CHECK(rows[2].eps_exact == doctest::Approx(-53.0 / 192.0));
  CHECK(rows[3].eps_exact == doctest::Approx(5581.0 / 4608.0));
}
