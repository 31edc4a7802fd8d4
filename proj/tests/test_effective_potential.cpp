#include <cmath>

#include "doctest.h"
#include "vpt/effective_potential.hpp"
#include "vpt/greens.hpp"
#include "vpt/optimizer.hpp"
#include "vpt/smearing.hpp"

using namespace vpt;
using namespace vpt::effective_potential;

TEST_CASE("free-particle limit of w1") {
  // B = 0, Omega = 0: all harmonic terms vanish, widths are beta/12
  const ThermoState st{1.0, 0.0};
  const Position x0{0.4, 0.9};
  const double v = w1(st, {0, 0, 0}, x0);
  FluctuationWidths w{st.beta / 12.0, st.beta / 12.0, 0.0};
  CHECK(v == doctest::Approx(smearing::coulomb_expectation(w, x0).value)
                 .epsilon(1e-12));
}

TEST_CASE("pure-field frequencies give the asymptotic constant plus coulomb") {
  const ThermoState st{1.0, 2.0};
  const Position x0{40.0, 0.0};
  const auto t = w1_terms(st, {2.0, 2.0, 0.0}, x0);
  CHECK(t.cross == doctest::Approx(0.0));
  CHECK(t.quad_perp == doctest::Approx(0.0));
  CHECK(t.quad_par == doctest::Approx(0.0));
  CHECK(t.total() - t.coulomb == doctest::Approx(w1_asymptote(st)).epsilon(1e-13));
}

TEST_CASE("w1 equals the term-by-term assembly") {
  const ThermoState st{1.0, 1.0};
  const FrequencyTriple om{0.8, 2.3, 1.1};
  const Position x0{1.0, 1.0};
  const auto w = greens::fluctuation_widths(st, om);
  const double byhand = -greens::trial_log_partition(st, om) / st.beta +
                        (st.cyclotron() - om.perp1) * w.b_perp_sq -
                        0.25 * (om.perp2 * om.perp2 - 1.0) * w.a_perp_sq -
                        0.5 * om.par * om.par * w.a_par_sq +
                        smearing::coulomb_expectation(w, x0).value;
  CHECK(w1(st, om, x0) == doctest::Approx(byhand).epsilon(1e-13));
}

TEST_CASE("asymptotic constant") {
  CHECK(w1_asymptote({1.0, 0.0}) == doctest::Approx(0.0));
  CHECK(w1_asymptote({1.0, 2.0}) ==
        doctest::Approx(0.16143936157119563).epsilon(1e-14));
  // beta = 100, B = 2: exact value; the large-beta form is w_c/2 - ln(beta w_c)/beta
  CHECK(w1_asymptote({100.0, 2.0}) ==
        doctest::Approx(0.94701682633451963).epsilon(1e-14));
  CHECK(w1_asymptote({100.0, 2.0}) ==
        doctest::Approx(1.0 - std::log(200.0) / 100.0).epsilon(1e-10));
}

TEST_CASE("b=0 curves are isotropic to the trial-family accuracy") {
  // The axially symmetric trial cannot follow a transverse displacement
  // exactly, so the two curves agree only approximately at B = 0.
  const ThermoState st{1.0, 0.0};
  OptimizerConfig cfg;
  const std::vector<double> rs{0.0, 0.5, 1.0};
  const auto t = potential_curve(st, Axis::kTransverse, rs, cfg);
  const auto l = potential_curve(st, Axis::kLongitudinal, rs, cfg);
  for (size_t i = 0; i < rs.size(); ++i) {
    CHECK(t[i].converged);
    CHECK(l[i].converged);
    CHECK(std::abs(t[i].w1 - l[i].w1) < 0.01 * std::abs(l[i].w1));
  }
  CHECK(t[0].w1 == doctest::Approx(l[0].w1).epsilon(1e-9));
}

TEST_CASE("parallel sweep is deterministic and matches serial") {
  const ThermoState st{1.0, 1.0};
  OptimizerConfig cfg;
  const std::vector<double> rs{0.0, 0.7, 1.4, 2.1};
  const auto serial = potential_curve(st, Axis::kLongitudinal, rs, cfg, 1);
  const auto par1 = potential_curve(st, Axis::kLongitudinal, rs, cfg, 3);
  const auto par2 = potential_curve(st, Axis::kLongitudinal, rs, cfg, 3);
  for (size_t i = 0; i < rs.size(); ++i) {
    CHECK(par1[i].w1 == par2[i].w1);  // scheduling-independent
    CHECK(par1[i].converged);
    CHECK(serial[i].w1 == doctest::Approx(par1[i].w1).epsilon(1e-7));
  }
}

TEST_CASE("asymptotic constants are ordered by field strength") {
  double prev = -1.0;
  for (double b : {0.0, 1.0, 2.0, 5.0}) {
    const double a = w1_asymptote({1.0, b});
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("anisotropy grows toward low temperature") {
  // relative transverse/longitudinal split at r = 1, beta = 0.1 vs beta = 100
  OptimizerConfig cfg;
  auto split = [&](double beta) {
    const ThermoState st{beta, 2.0};
    auto t = optimizer::minimize_w1(st, {1.0, 0.0}, cfg);
    auto l = optimizer::minimize_w1(st, {0.0, 1.0}, cfg);
    REQUIRE(t.converged);
    REQUIRE(l.converged);
    return (t.value - l.value) / std::abs(l.value);
  };
  const double hot = split(0.1), cold = split(100.0);
  CHECK(hot >= -1e-9);
  CHECK(cold > hot);
  CHECK(cold > 0.1);
  CHECK(std::abs(hot) < 1e-3);
}

TEST_CASE("large-r sample approaches the asymptote") {
  // beta=1, B=1, r=8: optimized Omega-part within 1e-3 of the constant
  const ThermoState st{1.0, 1.0};
  OptimizerConfig cfg;
  auto r = optimizer::minimize_w1(st, {0.0, 8.0}, cfg);
  REQUIRE(r.converged);
  const auto t = w1_terms(st, r.omega_opt, {0.0, 8.0});
  CHECK(std::abs(t.total() - t.coulomb - w1_asymptote(st)) < 1e-3);
}
