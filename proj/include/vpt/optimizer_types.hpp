#pragma once

#include "vpt/common.hpp"

namespace vpt {

struct OptimizerConfig {
  double tol_grad = 1e-9;
  double tol_step = 1e-11;
  int max_iter = 200;
  int n_multistart = 6;
  unsigned seed = 20210345;
};

struct OptimizationResult {
  FrequencyTriple omega_opt;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool hessian_psd = false;  // local-minimum certificate on free coordinates
};

}  // namespace vpt
