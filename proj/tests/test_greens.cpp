#include <cmath>
#include <random>

#include "doctest.h"
#include "vpt/greens.hpp"

using namespace vpt;
using namespace vpt::greens;

TEST_CASE("derived frequencies") {
  auto d = derived_frequencies({2.0, 2.0, 0.0});
  CHECK(d.plus == doctest::Approx(2.0));
  CHECK(d.minus == doctest::Approx(0.0));

  d = derived_frequencies({0.0, 3.0, 0.0});
  CHECK(d.plus == doctest::Approx(1.5));
  CHECK(d.minus == doctest::Approx(1.5));

  d = derived_frequencies({1.0, 3.0, 0.0});
  CHECK(d.plus == doctest::Approx(2.0));
  CHECK(d.minus == doctest::Approx(1.0));
  CHECK(d.omega_sq == doctest::Approx(2.0));
}

TEST_CASE("trial log partition") {
  CHECK(trial_log_partition({1.0, 0.0}, {0, 0, 0}) == doctest::Approx(0.0));
  // beta=1, perp1=perp2=2, par=0: single factor with beta*W+/2 = 1
  CHECK(trial_log_partition({1.0, 2.0}, {2, 2, 0}) ==
        doctest::Approx(-0.16143936157119563).epsilon(1e-14));
  CHECK_THROWS_AS(trial_log_partition({-1.0, 0.0}, {1, 1, 1}),
                  std::invalid_argument);

  // overflow-safe large-argument regime: ln Z ~ -beta(W+ + W- + Wpar)/2
  const ThermoState st{800.0, 0.0};
  const FrequencyTriple om{3.0, 5.0, 2.0};
  const double lz = trial_log_partition(st, om);
  const double leading = -0.5 * st.beta * (4.0 + 1.0 + 2.0);
  CHECK(std::isfinite(lz));
  CHECK(lz == doctest::Approx(leading).epsilon(1e-2));
  const double log_linear = std::log(st.beta * 4.0) + std::log(st.beta * 1.0) +
                            std::log(st.beta * 2.0);
  CHECK(lz - leading == doctest::Approx(log_linear).epsilon(1e-10));
}

TEST_CASE("trial log partition decreases in each frequency") {
  const ThermoState st{2.5, 0.0};
  const FrequencyTriple base{1.0, 2.0, 1.5};
  const double l0 = trial_log_partition(st, base);
  CHECK(trial_log_partition(st, {1.3, 2.0, 1.5}) < l0);
  CHECK(trial_log_partition(st, {1.0, 2.3, 1.5}) < l0);
  CHECK(trial_log_partition(st, {1.0, 2.0, 1.8}) < l0);
}

TEST_CASE("fluctuation width limits") {
  // par -> 0 at beta = 1: a_par^2 = 1/12
  auto w = fluctuation_widths({1.0, 0.0}, {1.0, 2.0, 0.0});
  CHECK(w.a_par_sq == doctest::Approx(1.0 / 12.0).epsilon(1e-14));

  // perp1 = 0: pure oscillator of frequency perp2/2
  const double beta = 1.7, om = 2.4;
  w = fluctuation_widths({beta, 0.0}, {0.0, om, 1.0});
  const double x = beta * om / 4.0;
  const double expect = (x / std::tanh(x) - 1.0) / (beta * om * om / 4.0);
  CHECK(w.a_perp_sq == doctest::Approx(expect).epsilon(1e-13));
  CHECK(w.b_perp_sq == doctest::Approx(0.0));
}

TEST_CASE("widths match the spectral oracle") {
  const ThermoState st{2.0, 0.0};
  const FrequencyTriple om{1.0, 2.0, 1.5};
  const auto a = fluctuation_widths(st, om);
  const auto b = matsubara_oracle_widths(st, om, 1000000);
  CHECK(a.a_perp_sq == doctest::Approx(b.a_perp_sq).epsilon(1e-10));
  CHECK(a.a_par_sq == doctest::Approx(b.a_par_sq).epsilon(1e-10));
  CHECK(a.b_perp_sq == doctest::Approx(b.b_perp_sq).epsilon(1e-9));

  std::mt19937 rng(12);
  std::uniform_real_distribution<double> uni(0.1, 10.0);
  for (int k = 0; k < 10; ++k) {
    const ThermoState s{uni(rng), 0.0};
    const FrequencyTriple o{uni(rng), uni(rng), uni(rng)};
    const auto x = fluctuation_widths(s, o);
    const auto y = matsubara_oracle_widths(s, o, 200000);
    CHECK(x.a_perp_sq == doctest::Approx(y.a_perp_sq).epsilon(1e-8));
    CHECK(x.a_par_sq == doctest::Approx(y.a_par_sq).epsilon(1e-8));
    CHECK(std::abs(x.b_perp_sq - y.b_perp_sq) <
          1e-8 * (std::abs(x.b_perp_sq) + 1.0));
  }
}

TEST_CASE("oracle details") {
  // zero prefactor: perp1 = 0 kills the mixed sum termwise
  auto w = matsubara_oracle_widths({1.5, 0.0}, {0.0, 2.0, 1.0}, 1000);
  CHECK(w.b_perp_sq == 0.0);

  // raw partial sums of a_perp^2 increase monotonically when Omega^2 > 0
  const ThermoState st{2.0, 0.0};
  const FrequencyTriple om{1.0, 2.0, 1.5};
  double prev = 0.0;
  for (long m : {1L, 10L, 100L, 10000L, 1000000L}) {
    const double s = matsubara_oracle_widths(st, om, m, false).a_perp_sq;
    CHECK(s > prev);
    prev = s;
  }
  CHECK(prev < fluctuation_widths(st, om).a_perp_sq);
}

TEST_CASE("classical subtraction") {
  // adding back 1/(beta Omega^2) gives the two-term coth expression
  const double beta = 1.3;
  const FrequencyTriple om{0.7, 2.1, 0.0};
  const auto d = derived_frequencies(om);
  const auto w = fluctuation_widths({beta, 0.0}, om);
  const double a1 = (d.plus * d.plus - d.omega_sq) /
                    (d.plus * d.plus - d.minus * d.minus);
  const double a2 = -(d.minus * d.minus - d.omega_sq) /
                    (d.plus * d.plus - d.minus * d.minus);
  auto coth_term = [&](double W) {
    return 0.5 / W / std::tanh(0.5 * beta * W);
  };
  const double unsubtracted = a1 * coth_term(d.plus) + a2 * coth_term(d.minus);
  CHECK(w.a_perp_sq + 1.0 / (beta * d.omega_sq) ==
        doctest::Approx(unsubtracted).epsilon(1e-12));
}

TEST_CASE("continuity at the degeneracies") {
  const ThermoState st{3.0, 0.0};
  double prev = 1.0;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const auto a = fluctuation_widths(st, {2.0 - eps, 2.0, 1.0});
    const auto b = fluctuation_widths(st, {2.0, 2.0, 1.0});
    const double d = std::abs(a.a_perp_sq - b.a_perp_sq) +
                     std::abs(a.b_perp_sq - b.b_perp_sq);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 1e-8);

  prev = 1.0;
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    const double d =
        std::abs(fluctuation_widths(st, {1.0, 2.0, eps}).a_par_sq -
                 fluctuation_widths(st, {1.0, 2.0, 0.0}).a_par_sq);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("zero temperature widths") {
  CHECK(zero_temperature_widths({0.5, 1.0, 2.0}).a_par_sq == doctest::Approx(0.25));
  CHECK_THROWS_AS(zero_temperature_widths({0.5, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(zero_temperature_widths({0.5, 0.0, 1.0}), std::invalid_argument);

  // isotropy on the 2*par = perp2 ray (the closed-form middle branch)
  auto w = zero_temperature_widths({0.0, 3.0, 1.5});
  CHECK(w.a_perp_sq == doctest::Approx(w.a_par_sq).epsilon(1e-14));

  // matches the finite-T formula extrapolated to beta -> infinity
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> uni(0.3, 4.0);
  for (int k = 0; k < 8; ++k) {
    FrequencyTriple om{uni(rng), uni(rng), uni(rng)};
    if (om.perp1 > om.perp2) std::swap(om.perp1, om.perp2);
    const auto zt = zero_temperature_widths(om);
    auto at = [&](double beta) { return fluctuation_widths({beta, 0.0}, om); };
    const auto w1 = at(1e4), w2 = at(2e4);
    CHECK(zt.a_perp_sq ==
          doctest::Approx(2 * w2.a_perp_sq - w1.a_perp_sq).epsilon(1e-6));
    CHECK(zt.a_par_sq ==
          doctest::Approx(2 * w2.a_par_sq - w1.a_par_sq).epsilon(1e-6));
    CHECK(zt.b_perp_sq ==
          doctest::Approx(2 * w2.b_perp_sq - w1.b_perp_sq).epsilon(1e-5));
  }
}
