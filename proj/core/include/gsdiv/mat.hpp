#pragma once

#include "gsdiv/estimation.hpp"

namespace gsdiv {

struct MatOptions {
  FitOptions fit;
  double bisect_tol = 1e-7;
  int bisect_max_iter = 61;
  double tail_tol = 1e-12;
};

// Pointwise blend [tau g^{1+gamma} + (1-tau) f0^{1+gamma}]^{1/(1+gamma)}
// (geometric blend g^tau f0^{1-tau} at gamma = -1). Endpoints return the
// inputs exactly. The result is generally NOT a probability vector; its
// total mass is recorded by the callers that care.
DiscreteDensity f_hat_tau(const DiscreteDensity& g, const DiscreteDensity& f0,
                          double gamma, double tau);

// lhs = tau S_(alpha, gamma/(1-alpha))(g, fhat)
//     + (1-tau) S_(alpha, (alpha-1-gamma)/(1-alpha))(fhat, f_theta),
// rhs = tau (1-tau) Q_(alpha,gamma,tau)(g, f_theta). Equal by the
// decomposition identity; both sides are computed independently.
std::pair<double, double> decomposition_identity_check(
    const DiscreteDensity& g, const DiscreteDensity& f_theta,
    const TuningParams& p);

struct TauFromC {
  double tau = 0.0;
  double phi_at_tau = 0.0;  // achieved boundary value
  bool monotone_warning = false;
};

// Invert c = phi(tau) = min_theta S_(alpha,(alpha-1-gamma)/(1-alpha))
// (fhat_tau, f_theta) by bisection; phi(0) = 0 anchors the search. Singleton
// family overload fixes f_theta = f0. Throws OutOfRange if c > phi(1).
TauFromC tau_from_c(const DiscreteDensity& g, const DiscreteDensity& f0,
                    double alpha, double gamma, double c,
                    const MatOptions& opts = {});
TauFromC tau_from_c(const DiscreteDensity& g, const ParametricModel& model,
                    double alpha, double gamma, double c,
                    const MatOptions& opts = {});

struct MatResult {
  double c = 0.0;
  double tau_star = 0.0;
  Vector theta_tau;         // MGSDE at (alpha, gamma, tau*)
  Vector theta_projection;  // model element closest to f_hat (boundary anchor)
  DiscreteDensity f_hat;
  double f_hat_mass = 0.0;
  double statistic = 0.0;        // T_n = 2n S_(alpha,gamma/(1-alpha))(r_n, f_hat)
  double statistic_model = 0.0;  // same with the model element in place of f_hat
  bool monotone_warning = false;
};

MatResult mat_statistic(const std::vector<int>& data,
                        const ParametricModel& model, double alpha,
                        double gamma, double c, const MatOptions& opts = {});
MatResult mat_statistic(const std::vector<int>& data, const DiscreteDensity& f0,
                        double alpha, double gamma, double c,
                        const MatOptions& opts = {});

}  // namespace gsdiv
