#pragma once

#include <string>
#include <vector>

#include "regdp/params.hpp"
#include "regdp/tables.hpp"

namespace regdp {

// Second-difference / monotonicity envelopes for the value function.
struct BoundsReport {
  double eps_l = 0.0;      // lower envelope of J(i+1)-2J(i)+J(i-1)
  double eps_u = 0.0;      // upper envelope, same-y
  double eps_bar_u = 0.0;  // cross-y drift allowance
  double upsilon = 0.0;    // lambda_dt * (n - n1)
};

// Closed-form envelopes from the fixed-point recursions. Throws
// std::domain_error when the parameter regime puts a geometric-series
// ratio at or beyond one (the envelope derivation diverges there).
BoundsReport epsilon_bounds(const ModelParams& p);

// One verified structural property over a solved table.
struct PropertyCheck {
  std::string name;
  bool pass = true;
  long violations = 0;
  State worst_state{0, 0, -1};
  double worst_margin = 0.0;  // signed slack-adjusted margin; < 0 fails
};

struct VerifyReport {
  std::vector<PropertyCheck> checks;
  double slack = 0.0;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Checks, at slack tolerance:
//   convexity-in-i:    eps_l <= J(i+1)-2J(i)+J(i-1) <= eps_u
//   cross-drift:       0 <= gap(i,y) - gap(i+1,y+dy) <= eps_bar_u
//   same-i drift:      eps_l <= gap(i,y) - gap(i,y+dy) <= eps_u + eps_bar_u
// where gap(i,y) = J(i,y) - J(i-1,y). Refuses a table whose metadata says
// it never converged.
VerifyReport verify_value_monotonicity(const ModelParams& p,
                                       const ValueTable& value,
                                       const BoundsReport& bounds,
                                       double slack);

// Checks thresholds are non-decreasing in i and non-increasing in y (same
// direction), at slack tolerance.
VerifyReport verify_policy_monotonicity(const ModelParams& p,
                                        const PolicyTable& policy,
                                        double slack);

// Verification slack implied by a table's solver metadata: the threshold
// grid step for cvi, 10 * tol * alpha / b otherwise.
double policy_slack(const ModelParams& p, const TableMeta& meta);
double value_slack(const TableMeta& meta);

struct AsymptoticRow {
  int n;
  double eps_u;
  double eps_bar_u;
};

// Large-fleet envelope law with penalty K held at kappa = K/(q*n)^2 and
// reserve q*n: eps_u(n) = 2K/(q*n)^2 / (r_disc + 2*(lambda+mu)) and
// eps_bar_u(n) = eps_u(n) / (r_disc + lambda + mu), an exact 1/n^2 decay.
std::vector<AsymptoticRow> asymptotic_epsilon(double penalty, double q,
                                              double r_disc, double lambda,
                                              double mu,
                                              const std::vector<int>& n_list);

}  // namespace regdp
