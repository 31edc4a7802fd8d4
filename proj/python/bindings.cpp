#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vpt/common.hpp"
#include "vpt/effective_potential.hpp"
#include "vpt/exact_field.hpp"
#include "vpt/greens.hpp"
#include "vpt/optimizer.hpp"
#include "vpt/smearing.hpp"
#include "vpt/strong_field.hpp"
#include "vpt/verify.hpp"
#include "vpt/weak_field.hpp"

namespace py = pybind11;

namespace {

py::dict widths_dict(const vpt::FluctuationWidths& w) {
  py::dict d;
  d["a_perp_sq"] = w.a_perp_sq;
  d["a_par_sq"] = w.a_par_sq;
  d["b_perp_sq"] = w.b_perp_sq;
  return d;
}

py::dict result_dict(const vpt::OptimizationResult& r) {
  py::dict d;
  d["omega_perp1"] = r.omega_opt.perp1;
  d["omega_perp2"] = r.omega_opt.perp2;
  d["omega_par"] = r.omega_opt.par;
  d["value"] = r.value;
  d["converged"] = r.converged;
  d["hessian_psd"] = r.hessian_psd;
  return d;
}

}  // namespace

PYBIND11_MODULE(vptmag, m) {
  m.doc() = "Variational effective classical potential for hydrogen in a uniform "
            "magnetic field (natural units)";
  m.attr("__version__") = vpt::kVersion;

  m.def("trial_log_partition",
        [](double beta, double o1, double o2, double op) {
          return vpt::greens::trial_log_partition({beta, 0.0}, {o1, o2, op});
        },
        py::arg("beta"), py::arg("omega_perp1"), py::arg("omega_perp2"),
        py::arg("omega_par"));

  m.def("fluctuation_widths",
        [](double beta, double o1, double o2, double op) {
          return widths_dict(vpt::greens::fluctuation_widths({beta, 0.0}, {o1, o2, op}));
        },
        py::arg("beta"), py::arg("omega_perp1"), py::arg("omega_perp2"),
        py::arg("omega_par"));

  m.def("zero_temperature_widths",
        [](double o1, double o2, double op) {
          return widths_dict(vpt::greens::zero_temperature_widths({o1, o2, op}));
        },
        py::arg("omega_perp1"), py::arg("omega_perp2"), py::arg("omega_par"));

  m.def("coulomb_expectation",
        [](double a_perp_sq, double a_par_sq, double rho, double z) {
          return vpt::smearing::coulomb_expectation({a_perp_sq, a_par_sq, 0.0},
                                                    {rho, z})
              .value;
        },
        py::arg("a_perp_sq"), py::arg("a_par_sq"), py::arg("rho"), py::arg("z"));

  m.def("coulomb_expectation_zero_t", &vpt::smearing::coulomb_expectation_zero_t,
        py::arg("omega_perp2"), py::arg("omega_par"));

  m.def("w1",
        [](double beta, double b, double o1, double o2, double op, double rho,
           double z) {
          return vpt::effective_potential::w1(vpt::make_state(beta, b), {o1, o2, op},
                                              {rho, z});
        },
        py::arg("beta"), py::arg("B"), py::arg("omega_perp1"), py::arg("omega_perp2"),
        py::arg("omega_par"), py::arg("rho") = 0.0, py::arg("z") = 0.0);

  m.def("w1_asymptote",
        [](double beta, double b) {
          return vpt::effective_potential::w1_asymptote(vpt::make_state(beta, b));
        },
        py::arg("beta"), py::arg("B"));

  m.def("minimize_w1",
        [](double beta, double b, double rho, double z, bool coulomb, unsigned seed) {
          vpt::OptimizerConfig cfg;
          cfg.seed = seed;
          return result_dict(vpt::optimizer::minimize_w1(vpt::make_state(beta, b),
                                                         {rho, z}, cfg, coulomb));
        },
        py::arg("beta"), py::arg("B"), py::arg("rho") = 0.0, py::arg("z") = 0.0,
        py::arg("coulomb") = true, py::arg("seed") = 20210345u);

  m.def("minimize_ground_state",
        [](double b, bool coulomb) {
          vpt::OptimizerConfig cfg;
          return result_dict(vpt::optimizer::minimize_ground_state(b, cfg, coulomb));
        },
        py::arg("B"), py::arg("coulomb") = true);

  m.def("binding_energy",
        [](double b) {
          vpt::OptimizerConfig cfg;
          return vpt::optimizer::binding_energy(b, cfg);
        },
        py::arg("B"));

  m.def("potential_curve",
        [](double beta, double b, const std::string& axis, std::vector<double> rs,
           int jobs) {
          using vpt::effective_potential::Axis;
          vpt::OptimizerConfig cfg;
          auto curve = vpt::effective_potential::potential_curve(
              vpt::make_state(beta, b),
              axis == "t" ? Axis::kTransverse : Axis::kLongitudinal, rs, cfg, jobs);
          py::list out;
          for (const auto& s : curve) {
            py::dict d;
            d["r"] = s.r;
            d["w1"] = s.w1;
            d["omega_perp1"] = s.omega_opt.perp1;
            d["omega_perp2"] = s.omega_opt.perp2;
            d["omega_par"] = s.omega_opt.par;
            d["converged"] = s.converged;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("beta"), py::arg("B"), py::arg("axis"), py::arg("r_values"),
        py::arg("jobs") = 1);

  m.def("h_function", &vpt::weak_field::h_function, py::arg("eta"));
  m.def("weak_field_energy", &vpt::weak_field::weak_field_energy, py::arg("B"),
        py::arg("eta"), py::arg("omega"));

  m.def("solve_series",
        [](int n_max) {
          py::list out;
          for (const auto& s : vpt::weak_field::solve_series(n_max)) {
            py::dict d;
            d["n"] = s.n;
            d["eta_n"] = s.eta_n;
            d["omega_n"] = s.omega_n;
            d["eps_n"] = s.eps_n;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("n_max") = 3);

  m.def("strong_field_functional", &vpt::strong_field::strong_field_functional,
        py::arg("B"), py::arg("omega_perp"), py::arg("omega_par"));
  m.def("iterate_omega_par", &vpt::strong_field::iterate_omega_par, py::arg("B"),
        py::arg("n_iter"));
  m.def("asymptotic_binding_energy",
        [](double b) {
          auto r = vpt::strong_field::asymptotic_binding_energy(b);
          py::dict d;
          d["terms"] = r.terms;
          d["six_term_sum"] = r.six_term_sum;
          d["correction"] = r.correction;
          d["total"] = r.total;
          return d;
        },
        py::arg("B"));
  m.def("landau_estimate", &vpt::strong_field::landau_estimate, py::arg("B"));

  m.def("exact_veff",
        [](double beta, double b) {
          return vpt::exact_field::exact_veff(vpt::make_state(beta, b));
        },
        py::arg("beta"), py::arg("B"));
  m.def("regulator_frequencies", &vpt::exact_field::regulator_frequencies,
        py::arg("omega_c"), py::arg("omega_reg"));

  m.def("run_acceptance",
        [](const std::string& only) {
          py::list out;
          for (const auto& r : vpt::verify::run_acceptance(only)) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            d["seconds"] = r.seconds;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("only") = "");
}
