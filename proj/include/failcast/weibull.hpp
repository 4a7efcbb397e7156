#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace failcast {

// Shape alpha, scale beta; CDF F(t) = 1 - exp(-(t/beta)^alpha).
struct WeibullParams {
  double alpha = 1.0;
  double beta = 1.0;
  bool valid() const { return alpha > 0 && beta > 0 && std::isfinite(alpha) && std::isfinite(beta); }
};

inline double weibull_cdf(const WeibullParams& p, double t) {
  if (t <= 0) return 0.0;
  return -std::expm1(-std::pow(t / p.beta, p.alpha));
}

inline double weibull_pdf(const WeibullParams& p, double t) {
  if (t <= 0) return 0.0;
  const double z = t / p.beta;
  return (p.alpha / p.beta) * std::pow(z, p.alpha - 1.0) * std::exp(-std::pow(z, p.alpha));
}

inline double weibull_log_pdf(const WeibullParams& p, double t) {
  if (t <= 0) return -std::numeric_limits<double>::infinity();
  const double logz = std::log(t / p.beta);
  return std::log(p.alpha / p.beta) + (p.alpha - 1.0) * logz - std::exp(p.alpha * logz);
}

// Inverse-transform sample: beta * (-ln(1-u))^(1/alpha) for u in [0,1).
inline double weibull_inverse_cdf(const WeibullParams& p, double u) {
  if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("weibull_inverse_cdf: u outside [0,1)");
  return p.beta * std::pow(-std::log1p(-u), 1.0 / p.alpha);
}

}  // namespace failcast
