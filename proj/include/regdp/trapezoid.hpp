#pragma once

namespace regdp {

// Trapezoid preference density on [t_min, t_max]: flat at height h on
// [t_min, t_hat], linear ramp down to zero at t_max. h = 2/(t_max + t_hat
// - 2*t_min) normalizes total mass to one. t_hat == t_max degenerates to
// the uniform density.
struct TrapezoidPdf {
  double t_min, t_max, t_hat;
  double h;  // plateau height

  static TrapezoidPdf make(double t_min, double t_max, double t_hat);

  // Density at temperature t. Domain error outside [t_min, t_max].
  double density(double t) const;
  // P(T <= t).
  double cdf(double t) const;
  // P(T >= u): fraction of preferences at or above threshold u.
  double survival(double u) const;
  // Inverse cdf; q in [0, 1].
  double quantile(double q) const;
  // E[b*(T - t_min); T >= u] = integral of b*(t - t_min)*density(t) over
  // [u, t_max]: expected surplus per observation under threshold u.
  double utility_integral(double u, double b) const;
  // utility_integral at u = t_min (every observation connects).
  double mean_utility(double b) const;
};

}  // namespace regdp
