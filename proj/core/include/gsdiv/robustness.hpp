#pragma once

#include "gsdiv/estimation.hpp"

namespace gsdiv {

// Sandwich pieces: curvature J, score variability V, avar = J^-1 V J^-1.
struct AsymptoticVariance {
  Matrix J;
  Matrix V;
  Matrix avar;
};

// Influence function of the minimum-divergence functional at the model,
// IF(y) = J_alpha^-1 [u(y) f^alpha(y) - xi_alpha]; depends on alpha only.
Vector if_at_model(int y, const ParametricModel& model, const Vector& theta,
                   double alpha, double tail_tol = 1e-12);

// General influence function at true density g with best-fit parameter
// theta_g. Requires g(y) > 0 when gamma < 0 (the g^gamma factor diverges
// otherwise).
Vector if_general(int y, const DiscreteDensity& g, const ParametricModel& model,
                  const Vector& theta_g, const TuningParams& p,
                  double tail_tol = 1e-12);

// Convenience overload that recomputes theta_g with the estimation module's
// global-minimizer rule.
Vector if_general_fit(int y, const DiscreteDensity& g,
                      const ParametricModel& model, const TuningParams& p,
                      const FitOptions& opts = {});

Matrix j_matrix(const DiscreteDensity& g, const ParametricModel& model,
                const Vector& theta, const TuningParams& p,
                double tail_tol = 1e-12);
Vector xi_vector(const DiscreteDensity& g, const ParametricModel& model,
                 const Vector& theta, const TuningParams& p,
                 double tail_tol = 1e-12);
Matrix v_matrix(const DiscreteDensity& g, const ParametricModel& model,
                const Vector& theta, const TuningParams& p,
                double tail_tol = 1e-12);

AsymptoticVariance asymptotic_variance(const DiscreteDensity& g,
                                       const ParametricModel& model,
                                       const Vector& theta,
                                       const TuningParams& p,
                                       double tail_tol = 1e-12);

// Model-case closed forms: J = int u u^T f^{1+alpha},
// V = int u u^T f^{1+2alpha} - xi xi^T, xi = int u f^{1+alpha}.
Matrix j_alpha(const ParametricModel& model, const Vector& theta, double alpha,
               double tail_tol = 1e-12);
Vector xi_alpha(const ParametricModel& model, const Vector& theta, double alpha,
                double tail_tol = 1e-12);
Matrix v_alpha(const ParametricModel& model, const Vector& theta, double alpha,
               double tail_tol = 1e-12);
AsymptoticVariance asymptotic_variance_at_model(const ParametricModel& model,
                                                const Vector& theta,
                                                double alpha,
                                                double tail_tol = 1e-12);

// Normal-location IF on a grid (used for the continuous-model curve).
double if_at_model_grid(double y, const NormalGridModel& model, double theta,
                        double alpha);

// Solve M x = b, refusing condition numbers above 1e12 (SingularJ).
Vector solve_guarded(const Matrix& m, const Vector& b);
Matrix invert_guarded(const Matrix& m);

}  // namespace gsdiv
