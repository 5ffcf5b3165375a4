#include "gsdiv/tuning.hpp"

#include <cmath>

#include "gsdiv/errors.hpp"

namespace gsdiv {

double lambda_of_tau(double alpha, double tau) {
  if (!(alpha < 1.0)) {
    throw DomainError("lambda_of_tau: requires alpha < 1");
  }
  return (alpha * tau - (1.0 - tau)) / (1.0 - alpha);
}

double tau_of_lambda(double alpha, double lambda) {
  if (!(alpha < 1.0)) {
    throw DomainError("tau_of_lambda: requires alpha < 1");
  }
  return (lambda * (1.0 - alpha) + 1.0) / (alpha + 1.0);
}

void TuningParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(gamma) || !std::isfinite(tau)) {
    throw DomainError("TuningParams: non-finite parameter");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw DomainError("TuningParams: alpha must lie in [0,1]");
  }
  if (tau < 0.0 || tau > 1.0) {
    throw DomainError("TuningParams: tau must lie in [0,1]");
  }
}

}  // namespace gsdiv
