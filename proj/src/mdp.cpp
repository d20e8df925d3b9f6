#include "regdp/mdp.hpp"

#include <stdexcept>

namespace regdp {

StateGrid state_grid(const ModelParams& p) {
  return StateGrid{p.n1, p.n2, p.y_levels, p.delta_y};
}

TrapezoidPdf pdf_at(const ModelParams& p, int y_idx) {
  return TrapezoidPdf::make(p.t_min, p.t_max,
                            p.t_hat_of_y(p.y_value(y_idx)));
}

double arrival_prob(const ModelParams& p, const TrapezoidPdf& pdf, int i,
                    double u) {
  return (p.n - i) * p.lambda_dt * pdf.survival(u);
}

double departure_prob(const ModelParams& p, int i) { return i * p.mu_dt; }

double tracking_penalty(const ModelParams& p, const State& s) {
  const double e = p.tracking_error(s.i, s.y_idx);
  return p.kappa * p.dt * e * e;
}

double expected_utility_rate(const ModelParams& p, const TrapezoidPdf& pdf,
                             int i, double u) {
  return (p.n - i) * p.lambda_dt * pdf.utility_integral(u, p.b);
}

double period_cost(const ModelParams& p, const TrapezoidPdf& pdf,
                   const State& s, double u) {
  double cost = tracking_penalty(p, s);
  // surplus rides on the arrival transition; drop it where arrivals are
  // suppressed (i == n2)
  if (s.i < p.n2) cost -= expected_utility_rate(p, pdf, s.i, u);
  return cost;
}

namespace {

void check_state(const ModelParams& p, const State& s) {
  if (s.i < p.n1 || s.i > p.n2 || s.y_idx < 0 || s.y_idx >= p.y_levels ||
      (s.dir != -1 && s.dir != +1))
    throw std::domain_error("transitions: state outside the grid");
}

}  // namespace

TransitionList transitions(const ModelParams& p, const State& s, double u) {
  check_state(p, s);
  if (u < p.t_min || u > p.t_max)
    throw std::domain_error("transitions: threshold outside the comfort band");

  TransitionList tl;
  const auto push = [&tl](const State& next, double prob) {
    for (int e = 0; e < tl.count; ++e) {
      if (tl.entries[e].next == next) {
        tl.entries[e].prob += prob;
        return;
      }
    }
    tl.add(next, prob);
  };

  double out = 0.0;
  if (s.i < p.n2) {
    const double a = arrival_prob(p, pdf_at(p, s.y_idx), s.i, u);
    if (a > 0.0) {
      push(State{s.i + 1, s.y_idx, s.dir}, a);
      out += a;
    }
  }
  if (s.i > p.n1) {
    const double d = departure_prob(p, s.i);
    if (d > 0.0) {
      push(State{s.i - 1, s.y_idx, s.dir}, d);
      out += d;
    }
  }

  // signal moves; a move past the edge reflects into the inward move
  const auto signal_move = [&](double mass, int step) {
    int ny = s.y_idx + step;
    int ndir = step;
    if (ny < 0 || ny >= p.y_levels) {
      ndir = -step;
      ny = s.y_idx + ndir;
    }
    push(State{s.i, ny, ndir}, mass);
    out += mass;
  };
  signal_move(p.gamma1, s.dir);
  signal_move(p.gamma2, -s.dir);

  tl.self_prob = 1.0 - out;
  return tl;
}

double bellman_backup(const ModelParams& p, const std::vector<double>& j,
                      const State& s, double u) {
  const StateGrid grid = state_grid(p);
  const auto tl = transitions(p, s, u);
  double ev = tl.self_prob * j[grid.index(s)];
  for (int e = 0; e < tl.count; ++e)
    ev += tl.entries[e].prob * j[grid.index(tl.entries[e].next)];
  return period_cost(p, pdf_at(p, s.y_idx), s, u) + p.alpha * ev;
}

}  // namespace regdp
