#include "regdp/adp.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "regdp/policy.hpp"
#include "regdp/rng.hpp"

namespace regdp {

FeatureVec feature_vector(const ModelParams& p, const State& s) {
  if (s.i < p.n1 || s.i > p.n2 || s.y_idx < 0 || s.y_idx >= p.y_levels ||
      (s.dir != -1 && s.dir != +1))
    throw std::domain_error("feature_vector: state outside the grid");
  const double ii = 2.0 * (s.i - p.n1) / (p.n2 - p.n1) - 1.0;
  const double y = p.y_value(s.y_idx);
  FeatureVec phi = FeatureVec::Zero();
  const int base = s.dir > 0 ? 0 : 6;
  phi[base + 0] = ii * ii;
  phi[base + 1] = ii;
  phi[base + 2] = y * y;
  phi[base + 3] = y;
  phi[base + 4] = ii * y;
  phi[base + 5] = 1.0;
  return phi;
}

double value_from_weights(const ModelParams& p, const WeightVector& r,
                          const State& s) {
  const FeatureVec phi = feature_vector(p, s);
  double v = 0.0;
  for (int k = 0; k < kFeatureDim; ++k) v += phi[k] * r.w[k];
  return v;
}

void EstimateAccumulator::add(const FeatureVec& phi, const FeatureVec& phi_next,
                              double cost, double alpha) {
  c_sum_.noalias() += phi * (phi - alpha * phi_next).transpose();
  m_sum_.noalias() += phi * phi.transpose();
  d_sum_.noalias() += phi * cost;
  ++count_;
}

FeatureMat EstimateAccumulator::c() const {
  if (count_ == 0)
    throw std::logic_error("estimates: no samples accumulated");
  return c_sum_ / static_cast<double>(count_);
}

FeatureVec EstimateAccumulator::d() const {
  if (count_ == 0)
    throw std::logic_error("estimates: no samples accumulated");
  return d_sum_ / static_cast<double>(count_);
}

FeatureMat EstimateAccumulator::second_moment() const {
  if (count_ == 0)
    throw std::logic_error("estimates: no samples accumulated");
  return m_sum_ / static_cast<double>(count_);
}

FeatureMat EstimateAccumulator::g() const {
  // ridge keeps the inverse defined while the sample span is still thin
  const FeatureMat m =
      second_moment() + 1e-8 * FeatureMat::Identity();
  return m.ldlt().solve(FeatureMat::Identity());
}

Estimates accumulate_estimates(const ModelParams& p,
                               std::span<const TransitionSample> traj,
                               long min_samples) {
  if (static_cast<long>(traj.size()) < min_samples)
    throw std::invalid_argument(
        "accumulate_estimates: trajectory shorter than the required minimum");
  EstimateAccumulator acc;
  for (const auto& t : traj)
    acc.add(feature_vector(p, t.s), feature_vector(p, t.next), t.cost,
            p.alpha);
  return Estimates{acc.c(), acc.d(), acc.g(), acc.count()};
}

Eigen::VectorXd pvi_step(const FeatureMat& c, const FeatureVec& d,
                         const FeatureMat& g, const Eigen::VectorXd& r,
                         double step) {
  if (r.size() != kFeatureDim)
    throw std::invalid_argument("pvi_step: weight vector must have 12 entries");
  return r - step * (g * (c * r - d));
}

namespace {

double greedy_threshold(const ModelParams& p, const WeightVector& r,
                        const State& s) {
  const int hi = std::min(s.i + 1, p.n2);
  const double gap = value_from_weights(p, r, State{hi, s.y_idx, s.dir}) -
                     value_from_weights(p, r, State{hi - 1, s.y_idx, s.dir});
  return optimal_price_threshold(p, gap);
}

}  // namespace

PolicyTable greedy_policy_from_weights(const ModelParams& p,
                                       const WeightVector& r) {
  const StateGrid grid = state_grid(p);
  PolicyTable table{grid, std::vector<double>(grid.size()), TableMeta{}};
  for (std::size_t idx = 0; idx < grid.size(); ++idx)
    table.u[idx] = greedy_threshold(p, r, grid.state(idx));
  table.meta.solver = "adp";
  table.meta.params_hash = params_hash(p);
  return table;
}

ValueTable value_table_from_weights(const ModelParams& p,
                                    const WeightVector& r) {
  const StateGrid grid = state_grid(p);
  ValueTable table{grid, std::vector<double>(grid.size()), TableMeta{}};
  for (std::size_t idx = 0; idx < grid.size(); ++idx)
    table.j[idx] = value_from_weights(p, r, grid.state(idx));
  table.meta.solver = "adp";
  table.meta.params_hash = params_hash(p);
  return table;
}

AdpReport adp_solve(const ModelParams& p, const AdpOptions& opt) {
  if (opt.k_min < 1 || opt.k_max < opt.k_min)
    throw std::invalid_argument("adp: need 1 <= k_min <= k_max");
  if (opt.eps_inner <= 0.0 ||
      (!std::isnan(opt.tau_outer) && opt.tau_outer <= 0.0))
    throw std::invalid_argument("adp: tolerances must be positive");
  if (opt.outer_cap < 1)
    throw std::invalid_argument("adp: outer_cap >= 1 required");

  const auto t0 = std::chrono::steady_clock::now();
  const StateGrid grid = state_grid(p);
  std::mt19937_64 rng(opt.seed);

  std::vector<TrapezoidPdf> pdfs;
  pdfs.reserve(p.y_levels);
  for (int y = 0; y < p.y_levels; ++y) pdfs.push_back(pdf_at(p, y));

  WeightVector r_old{};
  SolveReport rep;
  rep.history.reserve(opt.outer_cap);
  double tau_eff = std::isnan(opt.tau_outer) ? 1.0 : opt.tau_outer;

  for (int outer = 1; outer <= opt.outer_cap; ++outer) {
    EstimateAccumulator acc;
    Eigen::VectorXd r(kFeatureDim);
    for (int k = 0; k < kFeatureDim; ++k) r[k] = r_old.w[k];

    State s = grid.state(rng() % grid.size());
    for (long k = 0; k < opt.k_max; ++k) {
      const double u = greedy_threshold(p, r_old, s);
      const double cost = period_cost(p, pdfs[s.y_idx], s, u);
      const auto tl = transitions(p, s, u);
      State next = s;
      double x = u01(rng);
      for (int e = 0; e < tl.count; ++e) {
        if (x < tl.entries[e].prob) {
          next = tl.entries[e].next;
          break;
        }
        x -= tl.entries[e].prob;
      }

      acc.add(feature_vector(p, s), feature_vector(p, next), cost, p.alpha);
      const Eigen::VectorXd r_next = pvi_step(acc.c(), acc.d(), acc.g(), r);
      const double dr = (r_next - r).norm();
      r = r_next;
      s = next;
      if (k + 1 >= opt.k_min && dr < opt.eps_inner) break;
    }

    WeightVector r_new{};
    for (int k = 0; k < kFeatureDim; ++k) r_new.w[k] = r[k];

    // outer stop: fitted values settle across the whole grid; the
    // default threshold is relative because sample-average noise in the
    // estimates scales with the value surface itself
    double sup = 0.0;
    double sup_new = 0.0;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
      const State st = grid.state(idx);
      const double jn = value_from_weights(p, r_new, st);
      sup = std::max(sup, std::fabs(jn - value_from_weights(p, r_old, st)));
      sup_new = std::max(sup_new, std::fabs(jn));
    }
    r_old = r_new;
    rep.history.push_back(sup);
    rep.iterations = outer;
    tau_eff = std::isnan(opt.tau_outer) ? 0.05 * std::max(1.0, sup_new)
                                        : opt.tau_outer;
    if (sup < tau_eff) {
      rep.converged = true;
      break;
    }
  }

  rep.final_change = rep.history.back();
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  TableMeta meta;
  meta.solver = "adp";
  meta.params_hash = params_hash(p);
  meta.iterations = rep.iterations;
  meta.tol = tau_eff;
  meta.final_change = rep.final_change;
  meta.converged = rep.converged;
  meta.wall_seconds = rep.wall_seconds;
  meta.seed = opt.seed;

  rep.value = value_table_from_weights(p, r_old);
  rep.policy = greedy_policy_from_weights(p, r_old);
  rep.value.meta = meta;
  rep.policy.meta = meta;
  return AdpReport{std::move(rep), r_old};
}

}  // namespace regdp
