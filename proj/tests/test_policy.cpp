#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "regdp/policy.hpp"
#include "regdp/trapezoid.hpp"
#include "support/builders.hpp"

using regdp::ModelParams;
using regdp::ModelSpec;
using regdp::TrapezoidPdf;
using testsupport::params_with_alpha;
using testsupport::uniform;

namespace {

// Exhaustive search over a dense threshold grid; ground truth for the
// closed-form maximizer.
double brute_force_threshold(const ModelParams& p, const TrapezoidPdf& pdf,
                             double delta, int grid) {
  double best_u = p.t_min;
  double best_f = regdp::objective_f(p, pdf, p.t_min, delta);
  for (int k = 1; k < grid; ++k) {
    const double u =
        p.t_min + (p.t_max - p.t_min) * static_cast<double>(k) / (grid - 1);
    const double f = regdp::objective_f(p, pdf, u, delta);
    if (f > best_f) {
      best_f = f;
      best_u = u;
    }
  }
  return best_u;
}

}  // namespace

TEST_CASE("price / threshold maps: frozen values and round trip") {
  ModelSpec spec;
  spec.b = 2.0;
  const auto p = ModelParams::make(spec);
  CHECK(regdp::price_of_threshold(p, 3.0) == doctest::Approx(6.0));
  CHECK(regdp::price_of_threshold(p, p.t_min) == doctest::Approx(0.0));
  for (int k = 0; k <= 50; ++k) {
    const double u = p.t_min + (p.t_max - p.t_min) * k / 50.0;
    CHECK(regdp::threshold_of_price(p, regdp::price_of_threshold(p, u)) ==
          doctest::Approx(u).epsilon(1e-13));
  }
  CHECK_THROWS_AS(regdp::threshold_of_price(p, -0.01), std::domain_error);
  CHECK_THROWS_AS(
      regdp::threshold_of_price(p, 2.0 * (p.t_max - p.t_min) + 0.01),
      std::domain_error);
}

TEST_CASE("objective: endpoint and zero-delta behavior") {
  const auto p = params_with_alpha(ModelSpec{}, 0.99);
  const auto pdf = TrapezoidPdf::make(p.t_min, p.t_max, 5.0);

  // no admissions at the top of the band: zero surplus, zero exposure
  CHECK(regdp::objective_f(p, pdf, p.t_max, 3.7) == doctest::Approx(0.0));
  // delta = 0 removes the admission charge; the full mean surplus is
  // collected at u = t_min
  CHECK(regdp::objective_f(p, pdf, p.t_min, 0.0) ==
        doctest::Approx(pdf.mean_utility(p.b)).epsilon(1e-12));

  // a prohibitive delta makes every interior threshold lose money
  const double big = 100.0 * (p.t_max - p.t_min) / p.alpha;
  for (int k = 0; k < 200; ++k) {
    const double u = p.t_min + (p.t_max - p.t_min) * k / 200.0;
    CHECK(regdp::objective_f(p, pdf, u, big) <= 1e-12);
  }
}

TEST_CASE("optimal threshold: saturation branches and the interior formula") {
  const auto p = params_with_alpha(ModelSpec{}, 0.99);

  CHECK(regdp::optimal_price_threshold(p, -2.0) == doctest::Approx(p.t_min));
  CHECK(regdp::optimal_price_threshold(p, 0.0) == doctest::Approx(p.t_min));
  const double range = p.t_max - p.t_min;
  CHECK(regdp::optimal_price_threshold(p, 2.0 * range / p.alpha) ==
        doctest::Approx(p.t_max));
  // exact saturation ties resolve to the endpoints
  CHECK(regdp::optimal_price_threshold(p, p.b * range / p.alpha) ==
        doctest::Approx(p.t_max));

  // interior: t_min + alpha*delta/b
  CHECK(regdp::optimal_price_threshold(p, 50.0 / 11.0) ==
        doctest::Approx(0.99 * 50.0 / 11.0).epsilon(1e-12));
  CHECK(regdp::optimal_price_threshold(p, 50.0 / 11.0) ==
        doctest::Approx(4.5).epsilon(1e-10));
}

TEST_CASE("optimal threshold: b to zero gives bang-bang by sign of delta") {
  ModelSpec spec;
  spec.b = 0.0;
  const auto p = params_with_alpha(spec, 0.95);
  CHECK(regdp::optimal_price_threshold(p, 1e-9) == doctest::Approx(p.t_max));
  CHECK(regdp::optimal_price_threshold(p, -1e-9) == doctest::Approx(p.t_min));
  CHECK(regdp::optimal_price_threshold(p, 0.0) == doctest::Approx(p.t_min));
}

TEST_CASE("optimal threshold: non-decreasing in delta, slope alpha/b interior") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    ModelSpec spec;
    spec.b = uniform(rng, 0.3, 2.5);
    const auto p = params_with_alpha(spec, uniform(rng, 0.8, 0.999));
    const double range = p.t_max - p.t_min;
    const double hi = 1.3 * p.b * range / p.alpha;
    double prev = regdp::optimal_price_threshold(p, -0.2 * hi);
    for (int k = 1; k <= 400; ++k) {
      const double d = -0.2 * hi + 1.5 * hi * k / 400.0;
      const double u = regdp::optimal_price_threshold(p, d);
      CHECK(u >= prev - 1e-12);
      prev = u;
    }
    // interior slope
    const double d0 = 0.5 * p.b * range / p.alpha;
    const double dd = 1e-4;
    const double slope = (regdp::optimal_price_threshold(p, d0 + dd) -
                          regdp::optimal_price_threshold(p, d0 - dd)) /
                         (2.0 * dd);
    CHECK(slope == doctest::Approx(p.alpha / p.b).epsilon(1e-8));
  }
}

TEST_CASE("optimal threshold: dense-grid argmax oracle") {
  std::mt19937_64 rng(72);
  const int grid = 100001;
  for (int trial = 0; trial < 150; ++trial) {
    ModelSpec spec;
    spec.b = uniform(rng, 0.3, 2.5);
    const auto p = params_with_alpha(spec, uniform(rng, 0.8, 0.999));
    const double range = p.t_max - p.t_min;
    const auto pdf = TrapezoidPdf::make(
        p.t_min, p.t_max, uniform(rng, p.t_min, p.t_max));
    const double delta =
        uniform(rng, -0.3 * p.b * range, 1.3 * p.b * range / p.alpha);

    const double u_closed = regdp::optimal_price_threshold(p, delta);
    const double u_brute = brute_force_threshold(p, pdf, delta, grid);
    const double step = range / (grid - 1);
    CHECK(std::fabs(u_closed - u_brute) <= step + 1e-12);
    CHECK(regdp::objective_f(p, pdf, u_closed, delta) >=
          regdp::objective_f(p, pdf, u_brute, delta) - 1e-11);
  }
}

TEST_CASE("phi: limits, monotonicity, and the envelope sandwich") {
  std::mt19937_64 rng(73);
  const auto p = params_with_alpha(ModelSpec{}, 0.97);
  const auto pdf = TrapezoidPdf::make(p.t_min, p.t_max, 4.0);

  CHECK(regdp::phi(p, pdf, 0.0) ==
        doctest::Approx(pdf.mean_utility(p.b)).epsilon(1e-12));
  CHECK(regdp::phi(p, pdf, 1e9) == doctest::Approx(0.0));

  const double range = p.t_max - p.t_min;
  for (int trial = 0; trial < 1000; ++trial) {
    double d1 = uniform(rng, -range, 1.5 * range);
    double d2 = uniform(rng, -range, 1.5 * range);
    if (d1 > d2) std::swap(d1, d2);
    if (d2 - d1 < 1e-9) continue;
    const double ph1 = regdp::phi(p, pdf, d1);
    const double ph2 = regdp::phi(p, pdf, d2);
    CHECK(ph2 <= ph1 + 1e-12);

    // envelope: the admission probability at each endpoint's own optimizer
    // brackets the secant slope
    const double s1 = pdf.survival(regdp::optimal_price_threshold(p, d1));
    const double s2 = pdf.survival(regdp::optimal_price_threshold(p, d2));
    const double gap = d2 - d1;
    CHECK(ph2 - ph1 <= -p.alpha * s2 * gap + 1e-10);
    CHECK(ph2 - ph1 >= -p.alpha * s1 * gap - 1e-10);
  }
}
