#pragma once

#include <cmath>

namespace gsdiv {

// Below this distance from a removable singularity (gamma = -1, gamma =
// alpha, tau = 0 or 1, A = 0, B = 0) evaluation dispatches to the analytic
// limit form; the generic formula loses all precision there.
inline constexpr double kLimitEps = 1e-8;

// lambda_tau = (alpha*tau - (1-tau)) / (1-alpha), defined for alpha < 1.
double lambda_of_tau(double alpha, double tau);

// Inverse map tau = (lambda*(1-alpha) + 1) / (alpha + 1).
double tau_of_lambda(double alpha, double lambda);

// S-divergence exponent constants. A + B = 1 + alpha always.
struct SdConstants {
  double A;
  double B;
};

inline SdConstants sd_constants(double alpha, double lambda) {
  return {1.0 + lambda * (1.0 - alpha), alpha - lambda * (1.0 - alpha)};
}

// The (alpha, gamma, tau) triple indexing one member of the family.
// alpha and tau live in [0,1]; gamma is an unrestricted real.
struct TuningParams {
  double alpha = 0.0;
  double gamma = 0.0;
  double tau = 0.0;

  double tau_bar() const { return 1.0 - tau; }
  double lambda_tau() const { return lambda_of_tau(alpha, tau); }

  bool tau_at_zero() const { return tau < kLimitEps; }
  bool tau_at_one() const { return 1.0 - tau < kLimitEps; }
  bool gamma_at_neg1() const { return std::abs(gamma + 1.0) < kLimitEps; }
  bool gamma_at_alpha() const { return std::abs(gamma - alpha) < kLimitEps; }

  // Throws DomainError when alpha or tau leave [0,1] or any field is NaN.
  void validate() const;
};

}  // namespace gsdiv
