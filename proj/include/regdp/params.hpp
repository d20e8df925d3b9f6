#pragma once

#include <cstdint>
#include <limits>
#include <optional>

namespace regdp {

inline constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

// Raw model inputs as they appear in a config file. NaN fields fall back
// to derived defaults; exactly one of {delta_y, y_levels} and one of
// {tau_y, tau_y_over_dt} selects the signal grid resolution.
struct ModelSpec {
  int n = 100;             // appliance count
  int n1 = 0;              // lower occupancy cutoff
  int n2 = -1;             // upper occupancy cutoff (-1: defaults to n)
  double n_bar = kUnset;   // scheduled baseline (default n/2)
  double reserve = kUnset; // max regulation reserve R (default n/10)
  double penalty = 100.0;  // tracking penalty weight K
  double lambda = 2.0;     // per-appliance observation rate
  double mu = 0.5;         // service completion rate
  double b = 1.0;          // utility slope (price per degree)
  double t_min = 0.0;      // comfort band lower edge
  double t_max = 10.0;     // comfort band upper edge
  double alpha0 = kUnset;  // preference peak intercept (default band midpoint)
  double alpha1 = kUnset;  // preference peak slope in y (default -0.2*range)
  std::optional<double> delta_y;        // signal grid step
  std::optional<int> y_levels;          // signal grid size (alternative)
  std::optional<double> tau_y;          // mean signal dwell time
  std::optional<double> tau_y_over_dt;  // dwell time as a multiple of dt
  double r_disc = 1.0;     // continuous-time discount rate
};

// Validated parameter set with every derived quantity resolved. Per-period
// transition quantities carry the dt scaling already (lambda_dt, mu_dt,
// gamma1, gamma2), so downstream code never multiplies by dt itself.
struct ModelParams {
  // stored inputs
  int n, n1, n2;
  double n_bar, reserve, penalty;
  double lambda, mu;
  double b, t_min, t_max;
  double alpha0, alpha1;
  double delta_y;
  int y_levels;
  double tau_y;
  double r_disc;

  // derived
  double kappa;      // penalty / reserve^2
  double dt;         // uniformization period
  double alpha;      // per-period discount 1/(1 + r_disc*dt)
  double lambda_dt;  // per-period per-appliance observation probability
  double mu_dt;      // per-period per-appliance completion probability
  double gamma1;     // signal move prob, momentum direction (0.8 * dt/tau_y)
  double gamma2;     // signal move prob, against momentum (0.2 * dt/tau_y)

  // Validates the spec, resolves defaults and derived fields. Throws
  // std::invalid_argument naming the violated constraint.
  static ModelParams make(const ModelSpec& spec);

  double y_value(int y_idx) const { return -1.0 + delta_y * y_idx; }
  double tracking_error(int i, int y_idx) const {
    return static_cast<double>(i) - n_bar - y_value(y_idx) * reserve;
  }
  // Peak preferred temperature at signal level y, clamped to the comfort band.
  double t_hat_of_y(double y) const;
};

// FNV-1a hash of the canonical rendering of the stored inputs. Stable across
// runs and platforms with IEEE doubles; identifies which parameter set an
// artifact was produced from.
std::uint64_t params_hash(const ModelParams& p);

}  // namespace regdp
