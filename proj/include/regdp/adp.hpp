#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "regdp/mdp.hpp"
#include "regdp/params.hpp"
#include "regdp/solvers.hpp"
#include "regdp/tables.hpp"

namespace regdp {

inline constexpr int kFeatureDim = 12;

using FeatureVec = Eigen::Matrix<double, kFeatureDim, 1>;
using FeatureMat = Eigen::Matrix<double, kFeatureDim, kFeatureDim>;

// Quadratic value weights, one 6-block per direction. Order within a
// block: i'^2, i', y^2, y, i'*y, 1, where i' rescales [n1, n2] to [-1, 1].
// Indices 0..5 hold the dir=+1 block, 6..11 the dir=-1 block.
struct WeightVector {
  std::array<double, kFeatureDim> w{};
};

// Feature map: the block matching s.dir carries the quadratic monomials,
// the other block is zero.
FeatureVec feature_vector(const ModelParams& p, const State& s);

double value_from_weights(const ModelParams& p, const WeightVector& r,
                          const State& s);

// One observed transition under some behavior policy.
struct TransitionSample {
  State s;
  double u;
  double cost;
  State next;
};

// Running least-squares estimates built from feature-space observations:
//   C += phi * (phi - alpha*phi_next)', d += phi * cost, M += phi * phi'.
// g() inverts the second-moment average with +1e-8 ridge on the diagonal,
// so it exists even while M is rank-deficient.
class EstimateAccumulator {
 public:
  void add(const FeatureVec& phi, const FeatureVec& phi_next, double cost,
           double alpha);
  long count() const { return count_; }
  FeatureMat c() const;
  FeatureVec d() const;
  FeatureMat second_moment() const;
  FeatureMat g() const;  // regularized inverse of second_moment()

 private:
  FeatureMat c_sum_ = FeatureMat::Zero();
  FeatureMat m_sum_ = FeatureMat::Zero();
  FeatureVec d_sum_ = FeatureVec::Zero();
  long count_ = 0;
};

struct Estimates {
  FeatureMat c;
  FeatureVec d;
  FeatureMat g;
  long count = 0;
};

// Batch form over a recorded trajectory. Throws std::invalid_argument when
// the trajectory is shorter than min_samples.
Estimates accumulate_estimates(const ModelParams& p,
                               std::span<const TransitionSample> traj,
                               long min_samples = kFeatureDim);

// Projected fixed-point update r - step * g * (c*r - d).
Eigen::VectorXd pvi_step(const FeatureMat& c, const FeatureVec& d,
                         const FeatureMat& g, const Eigen::VectorXd& r,
                         double step = 1.0);

struct AdpOptions {
  long k_min = 400000;      // min inner transitions before the stop test
  long k_max = 4000000;     // inner safety cap
  double eps_inner = 5e-3;  // ||r_{k+1} - r_k|| inner stop
  // sup-norm fitted-value change at which the outer loop stops; NaN
  // (default) resolves to 5% of the fitted value's own sup-norm, which
  // tracks the Monte-Carlo noise floor across instance scales
  double tau_outer = kUnset;
  int outer_cap = 30;
  std::uint64_t seed = 1;
};

// Simulation-based projected value iteration: repeatedly simulates the
// greedy policy of the previous outer iterate while updating (C, d, G, r)
// every transition, until the fitted value table stops moving. Returns the
// greedy policy and fitted values of the final weights; SolveReport history
// holds per-outer-pass sup-norm value changes.
struct AdpReport {
  SolveReport report;
  WeightVector weights;
};

AdpReport adp_solve(const ModelParams& p, const AdpOptions& opt = {});

// Greedy threshold per state from fitted weights (one-sided gap at i == n2).
PolicyTable greedy_policy_from_weights(const ModelParams& p,
                                       const WeightVector& r);

ValueTable value_table_from_weights(const ModelParams& p,
                                    const WeightVector& r);

}  // namespace regdp
