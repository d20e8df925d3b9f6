#pragma once

#include <random>

#include "regdp/params.hpp"

// Shared parameter-set builders for the test suites.
namespace testsupport {

inline regdp::ModelParams make_params(regdp::ModelSpec spec) {
  return regdp::ModelParams::make(spec);
}

// Rebuilds spec with r_disc chosen so the per-period discount hits alpha.
// dt does not depend on r_disc, so one probe build suffices.
inline regdp::ModelParams params_with_alpha(regdp::ModelSpec spec,
                                            double alpha) {
  spec.r_disc = 1.0;
  const regdp::ModelParams probe = regdp::ModelParams::make(spec);
  spec.r_disc = (1.0 / alpha - 1.0) / probe.dt;
  return regdp::ModelParams::make(spec);
}

// The workhorse mid-size instance: 100 appliances, 21 signal levels.
inline regdp::ModelParams params_large() {
  regdp::ModelSpec spec;
  spec.n = 100;
  spec.n_bar = 50.0;
  spec.reserve = 10.0;
  spec.penalty = 100.0;
  spec.lambda = 2.0;
  spec.mu = 0.5;
  spec.delta_y = 0.1;
  return regdp::ModelParams::make(spec);
}

// Small instance for solver-heavy unit tests: 13 occupancy levels, 5
// signal levels, moderate discount.
inline regdp::ModelParams params_small() {
  regdp::ModelSpec spec;
  spec.n = 12;
  spec.n_bar = 6.0;
  spec.reserve = 3.0;
  spec.penalty = 50.0;
  spec.lambda = 1.5;
  spec.mu = 0.75;
  spec.y_levels = 5;
  spec.r_disc = 10.0;
  return regdp::ModelParams::make(spec);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace testsupport
