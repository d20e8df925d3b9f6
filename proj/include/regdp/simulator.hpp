#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "regdp/params.hpp"
#include "regdp/tables.hpp"
#include "regdp/trapezoid.hpp"

namespace regdp {

// Zone thermal model for the physical simulator: idle zones relax toward
// t_out with time constant tc_heat, active zones cool at c_rate.
struct ThermalParams {
  double t_out = 0.0;
  double tc_heat = 0.0;
  double c_rate = 0.0;
  double dt_sim = 0.0;          // control step; defaults to the MDP period
  double t_floor_margin = 2.0;  // active zones stop c_rate below t_min

  // Calibration matching the MDP rates: c_rate walks an active zone across
  // the comfort band in the mean service time 1/mu, and tc_heat is set so
  // an idle zone mid-band warms at the same speed, keeping idle dwell
  // times commensurate with 1/lambda observation spacing.
  static ThermalParams calibrated(const ModelParams& p);
};

// Regulation signal path: one entry per dwell interval tau_y.
struct SignalPoint {
  double y;
  int dir;
};

// Persistent random walk on the signal grid: keep direction w.p. 0.8,
// reverse w.p. 0.2, reflecting at y = +-1. Starts at the level nearest
// zero, moving up.
std::vector<SignalPoint> generate_rsr_signal(const ModelParams& p, long steps,
                                             std::uint64_t seed);

struct HistogramSnapshot {
  double t;
  double y;
  std::vector<double> idle_temps;
};

struct TraceRow {
  double t;
  double y;
  int dir;
  int active;
  double u;
  double err;  // tracking error i - n_bar - y*reserve
};

struct SimTrace {
  std::vector<TraceRow> rows;             // every record_every-th step
  std::vector<HistogramSnapshot> snapshots;
  long steps = 0;
  double sum_err_sq = 0.0;                // over all steps, not just recorded
  double realized_utility = 0.0;          // sum of b*(T - t_min) at connects
  long connects = 0;
  long completions = 0;
  std::uint64_t seed = 0;
};

struct SimOptions {
  std::uint64_t seed = 1;
  long snapshot_every = 200;  // control steps between idle-temp snapshots
  long record_every = 1;      // control steps between trace rows
};

// Drives n zones through the signal path under the table policy. Hard
// error if the policy grid does not match the params. Order within a step:
// thermal drift, then completions, then observations.
SimTrace simulate_building(const ModelParams& p, const ThermalParams& th,
                           const PolicyTable& policy,
                           const std::vector<SignalPoint>& signal,
                           const SimOptions& opt = {});

// Maximum-likelihood t_hat for a trapezoid on [t_min, t_max] fitted to
// samples (values outside the band are ignored). Golden-section search on
// the log-likelihood; throws std::invalid_argument when fewer than
// min_samples usable samples remain.
double fit_trapezoid(double t_min, double t_max,
                     const std::vector<double>& samples,
                     long min_samples = 100);

// Kolmogorov-Smirnov distance between the empirical cdf of samples (those
// inside the band) and the trapezoid cdf.
double ks_distance(const TrapezoidPdf& pdf, std::vector<double> samples);

struct RegressionFit {
  double alpha0_hat = 0.0;
  double alpha1_hat = 0.0;
  double r_squared = 0.0;
  double resid_se = 0.0;
  long n_points = 0;
};

// Ordinary least squares of fitted peaks on signal level. Throws
// std::invalid_argument on fewer than two distinct y values.
RegressionFit regress_t_hat_on_y(
    const std::vector<std::pair<double, double>>& y_that_pairs);

struct EvalOptions {
  int episodes = 16;
  long horizon = 20000;
  std::uint64_t seed = 1;
};

struct PolicyStats {
  double mean_discounted_cost = 0.0;
  double se_discounted_cost = 0.0;
  double rms_tracking_error = 0.0;
  double mean_period_utility = 0.0;
  double se_period_utility = 0.0;
  int episodes = 0;
};

// Monte-Carlo policy evaluation on the MDP chain itself (not the thermal
// simulator): discounted cost, tracking error, expected surplus per
// period. Utility accumulates its per-period expectation rather than
// realized draws, which keeps the estimator variance at zero when both
// cost terms vanish.
PolicyStats evaluate_policy(const ModelParams& p, const PolicyTable& policy,
                            const EvalOptions& opt = {});

}  // namespace regdp
