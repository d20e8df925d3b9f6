#include "regdp/policy.hpp"

#include <stdexcept>

namespace regdp {

double price_of_threshold(const ModelParams& p, double u) {
  return p.b * (u - p.t_min);
}

double threshold_of_price(const ModelParams& p, double price) {
  if (p.b <= 0.0)
    throw std::domain_error("threshold_of_price: requires b > 0");
  if (price < 0.0 || price > p.b * (p.t_max - p.t_min))
    throw std::domain_error("threshold_of_price: price outside [0, b*range]");
  return p.t_min + price / p.b;
}

double objective_f(const ModelParams& p, const TrapezoidPdf& pdf, double u,
                   double delta) {
  return pdf.utility_integral(u, p.b) - p.alpha * pdf.survival(u) * delta;
}

double optimal_price_threshold(const ModelParams& p, double delta) {
  const double ad = p.alpha * delta;
  if (ad <= 0.0) return p.t_min;
  if (ad >= p.b * (p.t_max - p.t_min)) return p.t_max;
  return p.t_min + ad / p.b;
}

double phi(const ModelParams& p, const TrapezoidPdf& pdf, double delta) {
  return objective_f(p, pdf, optimal_price_threshold(p, delta), delta);
}

}  // namespace regdp
