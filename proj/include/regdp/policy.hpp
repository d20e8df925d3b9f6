#pragma once

#include "regdp/params.hpp"
#include "regdp/trapezoid.hpp"

namespace regdp {

// Broadcast price corresponding to threshold u: b * (u - t_min).
double price_of_threshold(const ModelParams& p, double u);

// Inverse map; requires b > 0 and price in [0, b*(t_max - t_min)].
double threshold_of_price(const ModelParams& p, double price);

// Per-idle-appliance objective at threshold u given forward value gap
// delta = J(i+1,.) - J(i,.):
//   f(u, delta) = utility_integral(u) - alpha * survival(u) * delta.
// The optimal threshold maximizes expected surplus net of the discounted
// cost of admitting one more appliance.
double objective_f(const ModelParams& p, const TrapezoidPdf& pdf, double u,
                   double delta);

// Closed-form maximizer of objective_f:
//   t_max                      if alpha*delta >= b*(t_max - t_min)
//   t_min                      if alpha*delta <= 0
//   t_min + alpha*delta / b    otherwise.
// Ties at the branch points resolve to the saturated endpoint; the
// alpha*delta <= 0 test runs first, so b == 0 gives bang-bang by the sign
// of delta with zero mapping to t_min.
double optimal_price_threshold(const ModelParams& p, double delta);

// Value of objective_f at its maximizer.
double phi(const ModelParams& p, const TrapezoidPdf& pdf, double delta);

}  // namespace regdp
