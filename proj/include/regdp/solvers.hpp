#pragma once

#include <optional>
#include <vector>

#include "regdp/params.hpp"
#include "regdp/tables.hpp"

namespace regdp {

struct SolveOptions {
  double tol = 1e-6;      // sup-norm iterate change at which to stop
  int max_iter = 200000;
  int price_grid = 11;    // cvi: threshold grid size over [t_min, t_max]
};

struct SolveReport {
  ValueTable value;
  PolicyTable policy;
  std::vector<double> history;  // sup-norm change per sweep
  int iterations = 0;
  double final_change = 0.0;
  bool converged = false;
  double wall_seconds = 0.0;
};

// Value iteration over a discretized threshold grid (price_grid points
// spanning [t_min, t_max]). Synchronous sweeps; stops when the sup-norm
// change drops below tol. Hitting max_iter leaves converged == false with
// the last iterate in place.
SolveReport cvi_solve(const ModelParams& p, const SolveOptions& opt = {});

// Value iteration with the exact closed-form minimizer per state (the
// forward gap at i == n2 uses the one-sided difference). Same stopping
// contract as cvi_solve.
SolveReport avi_solve(const ModelParams& p, const SolveOptions& opt = {});

}  // namespace regdp
