#include <cmath>

#include "doctest.h"
#include "vpt/optimizer.hpp"
#include "vpt/strong_field.hpp"

using namespace vpt;
using namespace vpt::strong_field;

TEST_CASE("asymptotic constants") {
  auto c = asymptotic_constants();
  CHECK(c.a == doctest::Approx(1.307).epsilon(1e-3));
  CHECK(c.b == doctest::Approx(-1.548).epsilon(1e-3));
}

TEST_CASE("reduced functional") {
  // substitution W_perp = B
  const double b = 50.0, par = 3.0;
  CHECK(strong_field_functional(b, b, par) ==
        doctest::Approx(-0.25 * par - std::sqrt(par / M_PI) *
                                          std::log(par / (2.0 * b)))
            .epsilon(1e-13));

  // stationarity in W_perp at the self-consistency root
  const double perp = 2.0 * std::sqrt(par / M_PI) +
                      b * std::sqrt(1.0 + 4.0 * par / (M_PI * b * b));
  const double h = 1e-5 * perp;
  const double d = (strong_field_functional(b, perp + h, par) -
                    strong_field_functional(b, perp - h, par)) /
                   (2 * h);
  CHECK(std::abs(d) < 1e-9);
}

TEST_CASE("fixed-point iteration for the longitudinal frequency") {
  const double b = 1e5;
  const double y1 = 2.0 / std::sqrt(M_PI) * (std::log(2.0) + 5.0 * std::log(10.0) - 2.0);
  CHECK(std::sqrt(iterate_omega_par(b, 1)) == doctest::Approx(y1).epsilon(1e-14));

  // converging iterates
  double prev_diff = 1e300;
  double prev = iterate_omega_par(b, 1);
  for (int n = 2; n <= 8; ++n) {
    const double cur = iterate_omega_par(b, n);
    const double diff = std::abs(cur - prev);
    CHECK(diff < prev_diff);
    prev_diff = diff;
    prev = cur;
  }

  // same magnitude as the full optimizer's longitudinal frequency
  OptimizerConfig cfg;
  auto r = optimizer::minimize_ground_state(b, cfg);
  const double ratio = iterate_omega_par(b, 8) / r.omega_opt.par;
  CHECK(ratio > 0.5);
  CHECK(ratio < 2.0);

  CHECK_THROWS_AS(iterate_omega_par(3.0, 3), std::invalid_argument);
}

TEST_CASE("binding energy from the reduced functional at 1e5") {
  const double b = 1e5;
  const double par = iterate_omega_par(b, 3);
  const double eps = strong_field_functional(b, b, par);
  CHECK(std::abs(eps - 20.58) < 0.35);
}

TEST_CASE("asymptotic breakdown at 1e5") {
  auto r = asymptotic_binding_energy(1e5);
  const double expect[6] = {42.1912, -35.8181, 7.6019, 4.8173, 3.3098, 0.7632};
  for (int i = 0; i < 6; ++i) CHECK(std::abs(r.terms[i] - expect[i]) < 1e-3);
  CHECK(r.six_term_sum == doctest::Approx(22.87).epsilon(5e-4));
  CHECK(r.correction == doctest::Approx(-2.29).epsilon(5e-3));
  CHECK(r.total == doctest::Approx(20.58).epsilon(5e-4));
  CHECK_THROWS_AS(asymptotic_binding_energy(5.0), std::invalid_argument);
}

TEST_CASE("asymptotic total is consistent with the full optimization") {
  OptimizerConfig cfg;
  const double full = optimizer::binding_energy(1e5, cfg);
  const double asym = asymptotic_binding_energy(1e5).total;
  CHECK(std::abs(full - asym) < 0.3);
}

TEST_CASE("leading prefactor is 1/pi, not the landau 1/2") {
  double prev = 0.0;
  for (double b : {1e5, 1e8, 1e12}) {
    const double r = asymptotic_binding_energy(b).total * M_PI /
                     (std::log(b) * std::log(b));
    CHECK(r > prev);
    CHECK(r < 1.0);
    prev = r;
  }
  CHECK(1.0 - prev < 0.4);
}

TEST_CASE("divergence from the landau estimate") {
  double prev_gap = 0.0, prev_ratio_deficit = 1e300;
  for (double b : {1e3, 1e5, 1e8, 1e12}) {
    const double asym = asymptotic_binding_energy(b).total;
    const double landau = landau_estimate(b);
    const double gap = std::abs(landau - asym);
    CHECK(gap > prev_gap);  // absolute difference grows
    const double deficit = std::abs(asym / landau - 2.0 / M_PI);
    CHECK(deficit < prev_ratio_deficit);  // ratio -> 2/pi
    prev_gap = gap;
    prev_ratio_deficit = deficit;
  }
}

TEST_CASE("landau estimate values") {
  CHECK(landau_estimate(std::exp(1.0)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(landau_estimate(1e5) == doctest::Approx(66.273726380979975).epsilon(1e-12));
  CHECK(landau_estimate(2000.0) == doctest::Approx(28.886859099736438).epsilon(1e-12));
  CHECK_THROWS_AS(landau_estimate(0.5), std::invalid_argument);
}
