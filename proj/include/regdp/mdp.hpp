#pragma once

#include <vector>

#include "regdp/params.hpp"
#include "regdp/state.hpp"
#include "regdp/trapezoid.hpp"

namespace regdp {

StateGrid state_grid(const ModelParams& p);

// Preference density at signal level index y_idx.
TrapezoidPdf pdf_at(const ModelParams& p, int y_idx);

// One outgoing transition; self-loop mass is kept separately.
struct Transition {
  State next;
  double prob;
};

struct TransitionList {
  Transition entries[4];
  int count = 0;
  double self_prob = 0.0;

  void add(const State& s, double prob) {
    entries[count].next = s;
    entries[count].prob = prob;
    ++count;
  }
};

// Per-period probability that some idle appliance connects under broadcast
// threshold u: (n - i) * lambda_dt * survival(u). Zero at i == n.
double arrival_prob(const ModelParams& p, const TrapezoidPdf& pdf, int i,
                    double u);

// Per-period probability that some active appliance completes: i * mu_dt.
double departure_prob(const ModelParams& p, int i);

// Per-period quadratic tracking penalty kappa * dt * e(i,y)^2.
double tracking_penalty(const ModelParams& p, const State& s);

// Expected per-period occupant surplus (n - i) * lambda_dt *
// utility_integral(u). Interior form; boundary suppression is applied by
// period_cost, not here.
double expected_utility_rate(const ModelParams& p, const TrapezoidPdf& pdf,
                             int i, double u);

// Stage cost: tracking penalty minus expected surplus. The surplus term is
// dropped at i == n2, where connections are suppressed with the arrival
// transition they would ride on.
double period_cost(const ModelParams& p, const TrapezoidPdf& pdf,
                   const State& s, double u);

// Outgoing transitions from s under threshold u: arrival (suppressed at
// i == n2), departure (suppressed at i == n1), signal move with / against
// the current direction (reflected at y = +-1), and the self-loop
// remainder. Probabilities sum to one. Domain error on a state outside the
// grid or u outside the comfort band.
TransitionList transitions(const ModelParams& p, const State& s, double u);

// One Bellman application at s under threshold u against value table j
// (flat-indexed by state_grid(p)): period_cost + alpha * E[j(next)].
double bellman_backup(const ModelParams& p, const std::vector<double>& j,
                      const State& s, double u);

}  // namespace regdp
