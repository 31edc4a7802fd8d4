#include "vpt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "vpt/effective_potential.hpp"
#include "vpt/exact_field.hpp"
#include "vpt/greens.hpp"
#include "vpt/numerics.hpp"
#include "vpt/optimizer.hpp"
#include "vpt/smearing.hpp"
#include "vpt/strong_field.hpp"
#include "vpt/weak_field.hpp"

namespace vpt {
namespace verify {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

CriterionResult table1() {
  const double pi = M_PI;
  const double exp_eta[4] = {1.0, -405.0 * pi * pi / 7168.0,
                             16828965.0 * std::pow(pi, 4) / 1258815488.0,
                             -3886999332075.0 * std::pow(pi, 6) / 884272562962432.0};
  const double exp_om[4] = {32.0 / (9.0 * pi), 99.0 * pi / 224.0,
                            -1293975.0 * std::pow(pi, 3) / 19668992.0,
                            524431667187.0 * std::pow(pi, 5) / 27633517592576.0};
  const double exp_eps[4] = {-4.0 / (3.0 * pi), 9.0 * pi / 128.0,
                             -8019.0 * std::pow(pi, 3) / 1835008.0,
                             256449807.0 * std::pow(pi, 5) / 322256764928.0};
  auto series = weak_field::solve_series(3);
  double worst = 0.0;
  for (int n = 0; n <= 3; ++n) {
    worst = std::max(worst, rel_err(series[n].eta_n, exp_eta[n]));
    worst = std::max(worst, rel_err(series[n].omega_n, exp_om[n]));
    worst = std::max(worst, rel_err(series[n].eps_n, exp_eps[n]));
  }
  return {1, "table1-weak-field", worst < 1e-6,
          fmt("max relative error over (eta_n, Omega_n, eps_n), n=0..3: %.3e", worst),
          0.0};
}

CriterionResult zero_field_ground_state() {
  OptimizerConfig cfg;
  auto r = optimizer::minimize_ground_state(0.0, cfg);
  const double expect = -4.0 / (3.0 * M_PI);
  const double err = std::abs(r.value - expect);
  return {2, "zero-field-ground-state", r.converged && err < 1e-8,
          fmt("E(0) = %.12f, |E - (-4/3pi)| = %.3e", r.value, err), 0.0};
}

CriterionResult strong_field_binding() {
  OptimizerConfig cfg;
  const double eps = optimizer::binding_energy(1e5, cfg);
  return {3, "strong-field-binding", eps >= 20.55 && eps <= 20.65,
          fmt("binding_energy(1e5) = %.6f, window [20.55, 20.65]", eps), 0.0};
}

CriterionResult table2() {
  const double expect[6] = {42.1912, -35.8181, 7.6019, 4.8173, 3.3098, 0.7632};
  auto b = strong_field::asymptotic_binding_energy(1e5);
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(b.terms[i] - expect[i]));
  const bool ok = worst < 1e-3 && std::abs(b.six_term_sum - 22.87) <= 0.01 &&
                  std::abs(b.correction - (-2.29)) <= 0.01 &&
                  std::abs(b.total - 20.58) <= 0.01;
  return {4, "table2-asymptotics", ok,
          fmt("max term dev %.2e; sum %.4f (22.87), corr %.4f (-2.29), total %.4f (20.58)",
              worst, b.six_term_sum, b.correction, b.total),
          0.0};
}

CriterionResult landau_level_limit() {
  OptimizerConfig cfg;
  double worst = 0.0;
  for (double b : {0.1, 1.0, 10.0, 1e3}) {
    auto r = optimizer::minimize_ground_state(b, cfg, /*coulomb=*/false);
    worst = std::max(worst, std::abs(r.value - 0.5 * b));
  }
  return {5, "landau-level-limit", worst < 1e-8,
          fmt("max |E - w_c/2| over B in {0.1,1,10,1e3}: %.3e", worst), 0.0};
}

CriterionResult greens_oracle() {
  std::mt19937 rng(987123);
  std::uniform_real_distribution<double> uni(0.1, 10.0);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const ThermoState st{uni(rng), 0.0};
    const FrequencyTriple om{uni(rng), uni(rng), uni(rng)};
    const auto a = greens::fluctuation_widths(st, om);
    const auto b = greens::matsubara_oracle_widths(st, om, 1000000);
    worst = std::max({worst, rel_err(a.a_perp_sq, b.a_perp_sq),
                      rel_err(a.a_par_sq, b.a_par_sq),
                      std::abs(a.b_perp_sq - b.b_perp_sq) /
                          std::max({std::abs(a.b_perp_sq), 1e-6})});
  }
  return {6, "greens-oracle", worst < 1e-4,
          fmt("50 tuples, m_max=1e6: max relative error %.3e", worst), 0.0};
}

CriterionResult smearing_oracle() {
  std::mt19937 rng(555001);
  std::uniform_real_distribution<double> uni(0.1, 5.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    FluctuationWidths w{uni(rng), uni(rng), 0.0};
    const Position x0{uni(rng), uni(rng)};
    const auto one_d = smearing::coulomb_expectation(w, x0, 1e-11);
    auto coulomb = [](double x, double y, double z) {
      return -1.0 / std::sqrt(x * x + y * y + z * z);
    };
    const std::array<std::vector<double>, 3> splits = {
        std::vector<double>{0.0}, std::vector<double>{0.0}, std::vector<double>{0.0}};
    const auto cub = smearing::smear_potential(w, x0.rho, 0.0, x0.z, coulomb,
                                               5e-8, splits);
    worst = std::max(worst, rel_err(one_d.value, cub.value));
  }
  return {7, "smearing-oracle", worst < 1e-6,
          fmt("20 random (widths, positions): max relative error %.3e", worst), 0.0};
}

CriterionResult zero_t_consistency() {
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> uo(0.2, 5.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double perp2 = uo(rng);
    double eta;
    if (k < 7) eta = 1.05 + 0.045 * k;            // arctan branch
    else if (k < 14) eta = 0.10 + 0.12 * (k - 7); // log branch
    else eta = 1.0 + 0.02 * (k - 16);             // near the boundary
    const double par = 0.5 * eta * perp2;
    const double closed = smearing::coulomb_expectation_zero_t(perp2, par);
    // beta -> inf limit of the finite-T pipeline, checked at beta = 1e4 via
    // two-point Richardson extrapolation in 1/beta.
    auto finite_t = [&](double beta) {
      const ThermoState st{beta, 0.0};
      const FrequencyTriple om{0.0, perp2, par};
      const auto w = greens::fluctuation_widths(st, om);
      return smearing::coulomb_expectation(w, Position{0.0, 0.0}, 1e-12).value;
    };
    const double extrap = 2.0 * finite_t(2e4) - finite_t(1e4);
    worst = std::max(worst, rel_err(closed, extrap));
  }
  // Continuity across 2 par = perp2.
  double cont = 0.0;
  for (double perp2 : {0.3, 1.0, 4.0}) {
    const double lo = smearing::coulomb_expectation_zero_t(perp2, 0.5 * perp2 * (1 - 1e-8));
    const double mid = smearing::coulomb_expectation_zero_t(perp2, 0.5 * perp2);
    const double hi = smearing::coulomb_expectation_zero_t(perp2, 0.5 * perp2 * (1 + 1e-8));
    cont = std::max({cont, rel_err(lo, mid), rel_err(hi, mid)});
  }
  return {8, "zero-t-consistency", worst < 1e-6 && cont < 1e-6,
          fmt("20 pairs (all branches): max rel err %.3e; branch continuity %.3e",
              worst, cont),
          0.0};
}

CriterionResult series_scaling() {
  auto series = weak_field::solve_series(3);
  const double bs[3] = {0.01, 0.02, 0.05};
  double lx[3], ly[3];
  for (int i = 0; i < 3; ++i) {
    const long double b = bs[i];
    long double trunc = 0.5L * b;
    long double b2n = 1.0L;
    for (int n = 0; n <= 3; ++n) {
      trunc -= static_cast<long double>(series[n].eps_n) * b2n;
      b2n *= b * b;
    }
    const long double resid = std::abs(optimizer::binding_energy_ld(b) - trunc);
    lx[i] = std::log(static_cast<double>(bs[i]));
    ly[i] = std::log(static_cast<double>(resid));
  }
  // least-squares slope over the three points
  const double mx = (lx[0] + lx[1] + lx[2]) / 3.0, my = (ly[0] + ly[1] + ly[2]) / 3.0;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = num / den;
  return {9, "series-scaling", std::abs(slope - 8.0) <= 0.5,
          fmt("log-log residual slope over B in {0.01,0.02,0.05}: %.3f (target 8 +- 0.5)",
              slope),
          0.0};
}

CriterionResult potential_curve_structure() {
  using effective_potential::Axis;
  const ThermoState st{100.0, 2.0};
  OptimizerConfig cfg;
  std::vector<double> rs(161);
  for (int i = 0; i < 161; ++i) rs[i] = 8.0 * i / 160.0;
  const auto t_curve = effective_potential::potential_curve(st, Axis::kTransverse, rs, cfg);
  const auto l_curve = effective_potential::potential_curve(st, Axis::kLongitudinal, rs, cfg);

  bool all_conv = true;
  double w0 = t_curve[0].w1;
  bool min_at_origin = true;
  for (const auto& s : t_curve) {
    all_conv = all_conv && s.converged;
    if (s.r > 0 && s.w1 < w0) min_at_origin = false;
  }
  for (const auto& s : l_curve) {
    all_conv = all_conv && s.converged;
    if (s.r > 0 && s.w1 < w0) min_at_origin = false;
  }
  bool aniso = true;
  for (size_t i = 0; i < rs.size(); ++i)
    if (rs[i] > 0 && rs[i] <= 2.0 && t_curve[i].w1 < l_curve[i].w1 - 1e-9) aniso = false;

  // Asymptote at r_far = 8 * max width; the widths there are those of the
  // pure-field solution (a_par^2 -> beta/12). The Coulomb expectation decays
  // only as -1/r, so the check targets the optimized remaining potential
  // (W1 with the smeared-Coulomb part removed) against the constant; the raw
  // offset is reported alongside.
  const double r_far =
      8.0 * std::sqrt(std::max(st.beta / 12.0,
                               greens::fluctuation_widths(st, {2.0, 2.0, 0.0}).a_perp_sq));
  const double asym = effective_potential::w1_asymptote(st);
  double worst_far = 0.0, worst_raw = 0.0;
  for (int axis = 0; axis < 2; ++axis) {
    const Position x0 = axis == 0 ? Position{r_far, 0.0} : Position{0.0, r_far};
    auto r = optimizer::minimize_w1(st, x0, cfg);
    const auto terms = effective_potential::w1_terms(st, r.omega_opt, x0);
    worst_far = std::max(worst_far, std::abs(terms.total() - terms.coulomb - asym));
    worst_raw = std::max(worst_raw, std::abs(terms.total() - asym));
  }
  const bool ok = all_conv && min_at_origin && aniso && worst_far < 1e-3;
  return {10, "potential-curve-structure", ok,
          fmt("converged=%d min@0=%d transverse>=longitudinal(0,2]=%d; "
              "|W-<V>-asym|=%.2e at r=%.2f (raw |W-asym|=%.2e, Coulomb tail)",
              int(all_conv), int(min_at_origin), int(aniso), worst_far, r_far,
              worst_raw),
          0.0};
}

CriterionResult exact_field_equivalence() {
  bool identical = true;
  for (double beta : {0.3, 1.0, 100.0})
    for (double b : {0.0, 0.5, 2.0, 50.0}) {
      const ThermoState st{beta, b};
      if (exact_field::exact_veff(st) != effective_potential::w1_asymptote(st))
        identical = false;
    }
  // 4D phase-space quadrature of exp(-beta H_eff) over x0 in [0,1]^2.
  const ThermoState st{1.0, 2.0};
  const double L = 8.0 / std::sqrt(st.beta) + st.cyclotron();
  const double tol = 1e-9;
  auto ipy = [&](double x, double y, double px) {
    return integrate(
        [&](double py) {
          return std::exp(-st.beta * exact_field::exact_hamiltonian(st, px, py, x, y));
        },
        -L, L, tol / 64, 1e-300);
  };
  auto ipx = [&](double x, double y) {
    return integrate([&](double px) { return ipy(x, y, px).value; }, -L, L, tol / 16,
                     1e-300);
  };
  auto iy = [&](double x) {
    return integrate([&](double y) { return ipx(x, y).value; }, 0.0, 1.0, tol / 4,
                     1e-300);
  };
  auto ix = integrate([&](double x) { return iy(x).value; }, 0.0, 1.0, tol, 1e-300);
  const double z_num = ix.value / (4.0 * M_PI * M_PI);
  const double x_arg = 0.5 * st.beta * st.cyclotron();
  const double z_exact = (1.0 / (2.0 * M_PI * st.beta)) * x_arg / std::sinh(x_arg);
  const double err = rel_err(z_num, z_exact);
  return {11, "exact-field-equivalence", identical && err < 1e-6,
          fmt("exact_veff == w1_asymptote bitwise: %d; 4D quadrature rel err %.3e",
              int(identical), err),
          0.0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& only) {
  using Fn = std::function<CriterionResult()>;
  const std::vector<std::pair<std::string, Fn>> all = {
      {"table1-weak-field", table1},
      {"zero-field-ground-state", zero_field_ground_state},
      {"strong-field-binding", strong_field_binding},
      {"table2-asymptotics", table2},
      {"landau-level-limit", landau_level_limit},
      {"greens-oracle", greens_oracle},
      {"smearing-oracle", smearing_oracle},
      {"zero-t-consistency", zero_t_consistency},
      {"series-scaling", series_scaling},
      {"potential-curve-structure", potential_curve_structure},
      {"exact-field-equivalence", exact_field_equivalence},
  };
  std::vector<CriterionResult> out;
  for (const auto& [name, fn] : all) {
    if (!only.empty() && name.find(only) == std::string::npos) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = fn();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace verify
}  // namespace vpt
