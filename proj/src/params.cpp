#include "regdp/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace regdp {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("model params: " + what);
}

void require(bool ok, const char* constraint) {
  if (!ok) fail(std::string(constraint) + " violated");
}

}  // namespace

ModelParams ModelParams::make(const ModelSpec& spec) {
  ModelParams p{};
  p.n = spec.n;
  p.n1 = spec.n1;
  p.n2 = spec.n2 < 0 ? spec.n : spec.n2;
  p.n_bar = std::isnan(spec.n_bar) ? spec.n / 2.0 : spec.n_bar;
  p.reserve = std::isnan(spec.reserve) ? spec.n / 10.0 : spec.reserve;
  p.penalty = spec.penalty;
  p.lambda = spec.lambda;
  p.mu = spec.mu;
  p.b = spec.b;
  p.t_min = spec.t_min;
  p.t_max = spec.t_max;
  p.r_disc = spec.r_disc;

  require(p.n >= 2, "n >= 2");
  require(p.n1 >= 0, "n1 >= 0");
  require(p.n1 < p.n2, "n1 < n2");
  require(p.n2 <= p.n, "n2 <= n");
  require(p.reserve > 0.0, "reserve > 0");
  require(p.penalty >= 0.0, "penalty >= 0");
  require(p.lambda >= 0.0, "lambda >= 0");
  require(p.mu >= 0.0, "mu >= 0");
  require(std::max(p.lambda, p.mu) > 0.0, "max(lambda, mu) > 0");
  require(p.b >= 0.0, "b >= 0");
  require(p.t_min < p.t_max, "t_min < t_max");
  require(p.r_disc > 0.0, "r_disc > 0");
  require(p.n1 <= p.n_bar - p.reserve, "n1 <= n_bar - reserve");
  require(p.n_bar + p.reserve <= p.n2, "n_bar + reserve <= n2");

  p.alpha0 = std::isnan(spec.alpha0) ? 0.5 * (p.t_min + p.t_max) : spec.alpha0;
  p.alpha1 = std::isnan(spec.alpha1) ? -0.2 * (p.t_max - p.t_min) : spec.alpha1;
  require(p.alpha1 <= 0.0, "alpha1 <= 0");
  require(p.alpha0 >= p.t_min && p.alpha0 <= p.t_max,
          "alpha0 within [t_min, t_max]");

  if (spec.delta_y && spec.y_levels)
    fail("delta_y and y_levels are alternatives; give one");
  if (spec.y_levels) {
    require(*spec.y_levels >= 2, "y_levels >= 2");
    p.y_levels = *spec.y_levels;
  } else {
    const double dy = spec.delta_y.value_or(0.1);
    require(dy > 0.0 && dy <= 2.0, "delta_y in (0, 2]");
    const double levels = 2.0 / dy + 1.0;
    p.y_levels = static_cast<int>(std::lround(levels));
    if (std::fabs(levels - p.y_levels) > 1e-9)
      fail("delta_y must divide the signal range [-1, 1] evenly");
  }
  p.delta_y = 2.0 / (p.y_levels - 1);

  if (spec.tau_y && spec.tau_y_over_dt)
    fail("tau_y and tau_y_over_dt are alternatives; give one");
  const double rate_max = std::max(p.lambda, p.mu);
  if (spec.tau_y) {
    require(*spec.tau_y > 0.0, "tau_y > 0");
    p.tau_y = *spec.tau_y;
    p.dt = p.tau_y / (p.n * rate_max * p.tau_y + 1.0);
  } else {
    const double ratio = spec.tau_y_over_dt.value_or(10.0);
    require(ratio > 1.0, "tau_y_over_dt > 1");
    p.dt = (ratio - 1.0) / (ratio * p.n * rate_max);
    p.tau_y = ratio * p.dt;
  }

  p.kappa = p.penalty / (p.reserve * p.reserve);
  p.alpha = 1.0 / (1.0 + p.r_disc * p.dt);
  p.lambda_dt = p.lambda * p.dt;
  p.mu_dt = p.mu * p.dt;
  p.gamma1 = 0.8 * p.dt / p.tau_y;
  p.gamma2 = 0.2 * p.dt / p.tau_y;

  // worst-case one-period exit probability; the dt construction keeps it
  // at or below one, checked here against rounding surprises
  const double exit1 = (p.n - p.n1) * p.lambda_dt + p.n1 * p.mu_dt;
  const double exit2 = (p.n - p.n2) * p.lambda_dt + p.n2 * p.mu_dt;
  const double worst = std::max(exit1, exit2) + p.gamma1 + p.gamma2;
  require(worst <= 1.0 + 1e-12, "per-period exit probability <= 1");

  return p;
}

double ModelParams::t_hat_of_y(double y) const {
  return std::clamp(alpha0 + alpha1 * y, t_min, t_max);
}

std::uint64_t params_hash(const ModelParams& p) {
  char buf[640];
  std::snprintf(buf, sizeof buf,
                "n=%d;n1=%d;n2=%d;n_bar=%.17g;reserve=%.17g;penalty=%.17g;"
                "lambda=%.17g;mu=%.17g;b=%.17g;t_min=%.17g;t_max=%.17g;"
                "alpha0=%.17g;alpha1=%.17g;y_levels=%d;tau_y=%.17g;"
                "r_disc=%.17g",
                p.n, p.n1, p.n2, p.n_bar, p.reserve, p.penalty, p.lambda, p.mu,
                p.b, p.t_min, p.t_max, p.alpha0, p.alpha1, p.y_levels, p.tau_y,
                p.r_disc);
  std::uint64_t h = 1469598103934665603ull;
  for (const char* c = buf; *c; ++c) {
    h ^= static_cast<unsigned char>(*c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace regdp
