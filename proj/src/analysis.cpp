#include "regdp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace regdp {

namespace {

// Accumulates one property over a scan of state pairs. A margin is the
// signed distance to the nearer bound, slack included; negative fails.
struct CheckAcc {
  PropertyCheck c;

  explicit CheckAcc(const char* name) {
    c.name = name;
    c.worst_margin = std::numeric_limits<double>::infinity();
  }

  void add(const State& s, double margin) {
    if (margin < c.worst_margin) {
      c.worst_margin = margin;
      c.worst_state = s;
    }
    if (margin < 0.0) ++c.violations;
  }

  PropertyCheck done() {
    if (!std::isfinite(c.worst_margin)) c.worst_margin = 0.0;  // no pairs
    c.pass = c.violations == 0;
    return c;
  }
};

void require_table(const ModelParams& p, const TableMeta& meta,
                   const char* what) {
  if (!meta.converged)
    throw std::invalid_argument(std::string(what) +
                                ": refusing an unconverged table");
  if (meta.params_hash != params_hash(p))
    throw std::invalid_argument(
        std::string(what) + ": table was produced from different parameters");
}

}  // namespace

BoundsReport epsilon_bounds(const ModelParams& p) {
  const double s = p.lambda_dt + p.mu_dt;
  BoundsReport b;
  b.upsilon = p.lambda_dt * (p.n - p.n1);

  // each envelope is a geometric-series sum; a ratio at or past one means
  // the series diverges and the closed form is meaningless
  const double worst_ratio =
      std::max({p.alpha * std::fabs(1.0 - 2.0 * s - b.upsilon),
                p.alpha * std::fabs(1.0 - 2.0 * s),
                p.alpha * std::fabs(1.0 - s)});
  if (worst_ratio >= 1.0)
    throw std::domain_error(
        "epsilon bounds: envelope series diverges in this parameter regime "
        "(contraction ratio >= 1)");

  const double num = 2.0 * p.kappa * p.dt;
  b.eps_l = num / (1.0 - p.alpha * (1.0 - 2.0 * s - b.upsilon));
  b.eps_u = num / (1.0 - p.alpha * (1.0 - 2.0 * s));
  b.eps_bar_u = p.alpha * s / (1.0 - p.alpha * (1.0 - s)) * b.eps_u;
  return b;
}

VerifyReport verify_value_monotonicity(const ModelParams& p,
                                       const ValueTable& value,
                                       const BoundsReport& bounds,
                                       double slack) {
  require_table(p, value.meta, "value verify");
  const StateGrid& g = value.grid;
  const auto gap = [&](int i, int y, int d) {
    return value.at({i, y, d}) - value.at({i - 1, y, d});
  };

  CheckAcc conv("convexity-in-i");
  CheckAcc cross("cross-drift");
  CheckAcc same("same-i-drift");
  for (int d : {-1, +1}) {
    for (int y = 0; y < g.y_levels; ++y) {
      for (int i = g.n1 + 1; i <= g.n2; ++i) {
        const double gi = gap(i, y, d);
        if (i + 1 <= g.n2) {
          const double v = gap(i + 1, y, d) - gi;
          conv.add({i, y, d}, std::min(v - (bounds.eps_l - slack),
                                       (bounds.eps_u + slack) - v));
          if (y + 1 < g.y_levels) {
            const double w = gi - gap(i + 1, y + 1, d);
            cross.add({i, y, d},
                      std::min(w + slack, (bounds.eps_bar_u + slack) - w));
          }
        }
        if (y + 1 < g.y_levels) {
          const double w = gi - gap(i, y + 1, d);
          same.add({i, y, d},
                   std::min(w - (bounds.eps_l - slack),
                            (bounds.eps_u + bounds.eps_bar_u + slack) - w));
        }
      }
    }
  }

  VerifyReport rep;
  rep.slack = slack;
  rep.checks.push_back(conv.done());
  rep.checks.push_back(cross.done());
  rep.checks.push_back(same.done());
  return rep;
}

VerifyReport verify_policy_monotonicity(const ModelParams& p,
                                        const PolicyTable& policy,
                                        double slack) {
  require_table(p, policy.meta, "policy verify");
  const StateGrid& g = policy.grid;

  CheckAcc in_i("threshold-in-i");
  CheckAcc cross("threshold-cross-drift");
  CheckAcc same("threshold-same-i");
  for (int d : {-1, +1}) {
    for (int y = 0; y < g.y_levels; ++y) {
      for (int i = g.n1; i <= g.n2; ++i) {
        const double ui = policy.at({i, y, d});
        if (i + 1 <= g.n2) {
          in_i.add({i, y, d}, policy.at({i + 1, y, d}) - ui + slack);
          if (y + 1 < g.y_levels)
            cross.add({i, y, d},
                      ui - policy.at({i + 1, y + 1, d}) + slack);
        }
        if (y + 1 < g.y_levels)
          same.add({i, y, d}, ui - policy.at({i, y + 1, d}) + slack);
      }
    }
  }

  VerifyReport rep;
  rep.slack = slack;
  rep.checks.push_back(in_i.done());
  rep.checks.push_back(cross.done());
  rep.checks.push_back(same.done());
  return rep;
}

double policy_slack(const ModelParams& p, const TableMeta& meta) {
  if (meta.solver == "cvi" && meta.price_grid > 1)
    return (p.t_max - p.t_min) / (meta.price_grid - 1);
  if (p.b == 0.0) return p.t_max - p.t_min;  // no pricing; never bind
  return 10.0 * meta.tol * p.alpha / p.b;
}

double value_slack(const TableMeta& meta) { return 10.0 * meta.tol; }

std::vector<AsymptoticRow> asymptotic_epsilon(double penalty, double q,
                                              double r_disc, double lambda,
                                              double mu,
                                              const std::vector<int>& n_list) {
  if (!(q > 0.0))
    throw std::invalid_argument("asymptotic bounds: q > 0 violated");
  std::vector<AsymptoticRow> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    if (n < 1)
      throw std::invalid_argument("asymptotic bounds: n >= 1 violated");
    const double reserve = q * n;
    const double kap = penalty / (reserve * reserve);
    AsymptoticRow row;
    row.n = n;
    row.eps_u = 2.0 * kap / (r_disc + 2.0 * (lambda + mu));
    row.eps_bar_u = row.eps_u / (r_disc + lambda + mu);
    out.push_back(row);
  }
  return out;
}

}  // namespace regdp
