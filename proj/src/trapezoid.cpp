#include "regdp/trapezoid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace regdp {

namespace {

void check_band(const TrapezoidPdf& pdf, double t, const char* who) {
  if (t < pdf.t_min || t > pdf.t_max)
    throw std::domain_error(std::string(who) +
                            ": argument outside the comfort band");
}

}  // namespace

TrapezoidPdf TrapezoidPdf::make(double t_min, double t_max, double t_hat) {
  if (!(t_min < t_max))
    throw std::invalid_argument("trapezoid: t_min < t_max required");
  if (t_hat < t_min || t_hat > t_max)
    throw std::invalid_argument("trapezoid: t_hat within [t_min, t_max]");
  TrapezoidPdf pdf{t_min, t_max, t_hat, 0.0};
  pdf.h = 2.0 / (t_max + t_hat - 2.0 * t_min);
  return pdf;
}

double TrapezoidPdf::density(double t) const {
  check_band(*this, t, "density");
  if (t <= t_hat) return h;
  return h * (t_max - t) / (t_max - t_hat);
}

double TrapezoidPdf::cdf(double t) const {
  check_band(*this, t, "cdf");
  if (t <= t_hat) return h * (t - t_min);
  const double m = t_max - t;
  return 1.0 - h * m * m / (2.0 * (t_max - t_hat));
}

double TrapezoidPdf::survival(double u) const {
  check_band(*this, u, "survival");
  if (u <= t_hat) return 1.0 - h * (u - t_min);
  const double m = t_max - u;
  return h * m * m / (2.0 * (t_max - t_hat));
}

double TrapezoidPdf::quantile(double q) const {
  if (q < 0.0 || q > 1.0)
    throw std::domain_error("quantile: q outside [0, 1]");
  const double plateau_mass = h * (t_hat - t_min);
  if (q <= plateau_mass) return t_min + q / h;
  const double c = t_max - t_hat;
  const double m2 = 2.0 * c * (1.0 - q) / h;
  return t_max - std::sqrt(std::max(0.0, m2));
}

double TrapezoidPdf::utility_integral(double u, double b) const {
  check_band(*this, u, "utility_integral");
  const double a = t_hat - t_min;
  const double c = t_max - t_hat;
  if (u <= t_hat) {
    const double w = u - t_min;
    return b * h * ((a * a - w * w) / 2.0 + c * (3.0 * a + c) / 6.0);
  }
  const double m = t_max - u;
  return b * h * m * m * (3.0 * (u - t_min) + m) / (6.0 * c);
}

double TrapezoidPdf::mean_utility(double b) const {
  return utility_integral(t_min, b);
}

}  // namespace regdp
