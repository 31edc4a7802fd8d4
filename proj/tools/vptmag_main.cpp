#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vpt/common.hpp"
#include "vpt/effective_potential.hpp"
#include "vpt/exact_field.hpp"
#include "vpt/io.hpp"
#include "vpt/optimizer.hpp"
#include "vpt/strong_field.hpp"
#include "vpt/verify.hpp"
#include "vpt/weak_field.hpp"

namespace {

using vpt::io::Record;

struct CommonOpts {
  std::string format = "csv";
  std::string out;
  unsigned seed = 20210345;
  int jobs = 1;
  int multistart = 6;
  bool si = false;
  bool allow_partial = false;
};

void add_common(CLI::App* cmd, CommonOpts* c) {
  cmd->add_option("--format", c->format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c->out, "output path (default: stdout)");
  cmd->add_option("--seed", c->seed, "random seed for multistart");
  cmd->add_option("--multistart", c->multistart, "number of random starts")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", c->jobs, "parallel workers (default 1, serial)");
  cmd->add_flag("--si", c->si, "append SI-unit columns");
  cmd->add_flag("--allow-partial", c->allow_partial,
                "exit 0 even if some points did not converge");
}

int effective_jobs(const CommonOpts& c) {
  if (const char* env = std::getenv("VPT_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return std::max(1, c.jobs);
}

void emit(const CommonOpts& c,
          const std::vector<std::pair<std::string, vpt::io::Value>>& config,
          const std::vector<Record>& records) {
  std::string text =
      c.format == "json" ? vpt::io::to_json(config, records) : vpt::io::to_csv(records);
  if (c.out.empty())
    std::cout << text;
  else
    vpt::io::write_file(c.out, text);
}

double wall_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

int cmd_potential(const CommonOpts& c, double beta, std::vector<double> b_list,
                  const std::string& axis, double rmin, double rmax, int points) {
  using vpt::effective_potential::Axis;
  vpt::OptimizerConfig cfg;
  cfg.seed = c.seed;
  cfg.n_multistart = c.multistart;
  std::vector<double> rs(points);
  for (int i = 0; i < points; ++i)
    rs[i] = points == 1 ? rmin : rmin + (rmax - rmin) * i / (points - 1);
  std::vector<Record> recs;
  bool all_ok = true;
  for (double b : b_list) {
    const vpt::ThermoState st = vpt::make_state(beta, b);
    std::vector<Axis> axes;
    if (axis == "t" || axis == "both") axes.push_back(Axis::kTransverse);
    if (axis == "l" || axis == "both") axes.push_back(Axis::kLongitudinal);
    for (Axis ax : axes) {
      const auto t0 = std::chrono::steady_clock::now();
      auto curve = vpt::effective_potential::potential_curve(st, ax, rs, cfg,
                                                             effective_jobs(c));
      const double ms = wall_ms(t0) / curve.size();
      for (const auto& s : curve) {
        Record r;
        r.add("beta", beta);
        r.add("B", b);
        r.add("r", s.r);
        r.add("axis", std::string(ax == Axis::kTransverse ? "t" : "l"));
        r.add("W1", s.w1);
        r.add("Omega_perp1", s.omega_opt.perp1);
        r.add("Omega_perp2", s.omega_opt.perp2);
        r.add("Omega_par", s.omega_opt.par);
        r.add("converged", s.converged);
        r.add("wall_ms", ms);
        if (c.si) r.add("W1_eV", s.w1 * vpt::kEnergyUnitEv);
        all_ok = all_ok && s.converged;
        recs.push_back(std::move(r));
      }
    }
  }
  emit(c, {{"command", std::string("potential")}, {"version", std::string(vpt::kVersion)},
           {"beta", beta}, {"seed", (long long)c.seed}},
       recs);
  return (all_ok || c.allow_partial) ? 0 : 2;
}

int cmd_binding(const CommonOpts& c, double bmin, double bmax, int points, bool log_grid) {
  vpt::OptimizerConfig cfg;
  cfg.seed = c.seed;
  cfg.n_multistart = c.multistart;
  std::vector<Record> recs;
  bool all_ok = true;
  for (int i = 0; i < points; ++i) {
    double b;
    if (points == 1) b = bmin;
    else if (log_grid)
      b = bmin * std::pow(bmax / bmin, double(i) / (points - 1));
    else
      b = bmin + (bmax - bmin) * i / (points - 1);
    const auto t0 = std::chrono::steady_clock::now();
    auto r = vpt::optimizer::minimize_ground_state(b, cfg);
    Record rec;
    rec.add("B", b);
    rec.add("eps1", 0.5 * b - r.value);
    rec.add("E1", r.value);
    rec.add("Omega_perp2_opt", r.omega_opt.perp2);
    rec.add("Omega_par_opt", r.omega_opt.par);
    rec.add("landau_estimate", b > 1.0 ? vpt::strong_field::landau_estimate(b)
                                       : std::nan(""));
    rec.add("converged", r.converged);
    rec.add("wall_ms", wall_ms(t0));
    if (c.si) {
      rec.add("B_tesla", b * vpt::kFieldUnitTesla);
      rec.add("eps1_eV", (0.5 * b - r.value) * vpt::kEnergyUnitEv);
    }
    all_ok = all_ok && r.converged;
    recs.push_back(std::move(rec));
  }
  emit(c, {{"command", std::string("binding")}, {"version", std::string(vpt::kVersion)},
           {"seed", (long long)c.seed}},
       recs);
  return (all_ok || c.allow_partial) ? 0 : 2;
}

int cmd_weak_field(const CommonOpts& c, int order) {
  auto rows = vpt::weak_field::compare_exact(order);
  auto series = vpt::weak_field::solve_series(order);
  std::vector<Record> recs;
  for (size_t i = 0; i < rows.size(); ++i) {
    Record r;
    r.add("n", (long long)rows[i].n);
    r.add("eta_n", series[i].eta_n);
    r.add("Omega_n", series[i].omega_n);
    r.add("eps_n", rows[i].eps_variational);
    r.add("eps_n_exact", rows[i].eps_exact);
    recs.push_back(std::move(r));
  }
  emit(c, {{"command", std::string("weak-field")},
           {"version", std::string(vpt::kVersion)}, {"order", (long long)order}},
       recs);
  return 0;
}

int cmd_strong_field(const CommonOpts& c, const std::vector<double>& b_list) {
  std::vector<Record> recs;
  for (double b : b_list) {
    auto r = vpt::strong_field::asymptotic_binding_energy(b);
    Record rec;
    rec.add("B", b);
    for (int i = 0; i < 6; ++i) rec.add("term" + std::to_string(i + 1), r.terms[i]);
    rec.add("six_term_sum", r.six_term_sum);
    rec.add("correction", r.correction);
    rec.add("total", r.total);
    rec.add("landau_estimate", vpt::strong_field::landau_estimate(b));
    recs.push_back(std::move(rec));
  }
  emit(c, {{"command", std::string("strong-field")},
           {"version", std::string(vpt::kVersion)}},
       recs);
  return 0;
}

int cmd_exact_field(const CommonOpts& c, double beta, double b) {
  const vpt::ThermoState st = vpt::make_state(beta, b);
  auto r = vpt::exact_field::exact_field_result(st);
  Record rec;
  rec.add("beta", beta);
  rec.add("B", b);
  rec.add("v_eff", r.v_eff);
  rec.add("log_z_per_area", r.log_z_per_area);
  if (c.si) rec.add("v_eff_eV", r.v_eff * vpt::kEnergyUnitEv);
  emit(c, {{"command", std::string("exact-field")},
           {"version", std::string(vpt::kVersion)}},
       {rec});
  return 0;
}

int cmd_verify(const std::string& only, bool json) {
  auto results = vpt::verify::run_acceptance(only);
  if (json) {
    std::vector<Record> recs;
    for (const auto& r : results) {
      Record rec;
      rec.add("id", (long long)r.id);
      rec.add("name", r.name);
      rec.add("passed", r.passed);
      rec.add("detail", r.detail);
      rec.add("seconds", r.seconds);
      recs.push_back(std::move(rec));
    }
    std::cout << vpt::io::to_json({{"command", std::string("verify")},
                                   {"version", std::string(vpt::kVersion)}},
                                  recs)
              << "\n";
  } else {
    for (const auto& r : results)
      std::printf("[%s] %2d %-26s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.seconds, r.detail.c_str());
  }
  for (const auto& r : results)
    if (!r.passed) return 1;
  return results.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order variational effective classical potential for hydrogen "
               "in a uniform magnetic field"};
  app.require_subcommand(1);

  CommonOpts c_pot, c_bind, c_weak, c_strong, c_exact;

  auto* pot = app.add_subcommand("potential", "optimized W1 curves over a radial grid");
  double beta = 1.0, rmin = 0.0, rmax = 8.0;
  int points = 161;
  std::vector<double> b_list{1.0};
  std::string axis = "both";
  pot->add_option("--beta", beta, "inverse temperature")->required();
  pot->add_option("--B", b_list, "field strengths")->required()->delimiter(',');
  pot->add_option("--axis", axis, "t | l | both")->check(CLI::IsMember({"t", "l", "both"}));
  pot->add_option("--rmin", rmin, "grid start");
  pot->add_option("--rmax", rmax, "grid end");
  pot->add_option("--points", points, "grid size")->check(CLI::PositiveNumber);
  add_common(pot, &c_pot);

  auto* bind = app.add_subcommand("binding", "zero-temperature binding energy vs B");
  double bmin = 1e-2, bmax = 1e5;
  int bpoints = 29;
  bool log_grid = false;
  bind->add_option("--Bmin", bmin)->required();
  bind->add_option("--Bmax", bmax)->required();
  bind->add_option("--points", bpoints)->check(CLI::PositiveNumber);
  bind->add_flag("--log", log_grid, "logarithmic B grid");
  add_common(bind, &c_bind);

  auto* weak = app.add_subcommand("weak-field", "weak-field series coefficients");
  int order = 3;
  weak->add_option("--order", order)->check(CLI::Range(0, 7));
  add_common(weak, &c_weak);

  auto* strong = app.add_subcommand("strong-field", "strong-field asymptotic breakdown");
  std::vector<double> sb_list{1e5};
  strong->add_option("--B", sb_list)->required()->delimiter(',');
  add_common(strong, &c_strong);

  auto* exact = app.add_subcommand("exact-field", "exact pure-field baseline");
  double ebeta = 1.0, eb = 1.0;
  exact->add_option("--beta", ebeta)->required();
  exact->add_option("--B", eb)->required();
  add_common(exact, &c_exact);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  std::string only;
  bool vjson = false;
  verify->add_option("--only", only, "run criteria whose name contains this string");
  verify->add_flag("--json", vjson, "machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pot->parsed()) return cmd_potential(c_pot, beta, b_list, axis, rmin, rmax, points);
    if (bind->parsed()) return cmd_binding(c_bind, bmin, bmax, bpoints, log_grid);
    if (weak->parsed()) return cmd_weak_field(c_weak, order);
    if (strong->parsed()) return cmd_strong_field(c_strong, sb_list);
    if (exact->parsed()) return cmd_exact_field(c_exact, ebeta, eb);
    if (verify->parsed()) return cmd_verify(only, vjson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
