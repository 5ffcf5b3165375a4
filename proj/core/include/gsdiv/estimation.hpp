#pragma once

#include <cmath>
#include <optional>

#include "gsdiv/divergence.hpp"
#include "gsdiv/grid_model.hpp"
#include "gsdiv/model.hpp"

namespace gsdiv {

// r_n(x) = (1/n) sum I(X_i = x) on [min(data), max(data)].
DiscreteDensity relative_frequency(const std::vector<int>& data);

// How an SKL-type objective (exponent A = 0, log residuals) treats cells
// where the model window has mass but the data do not. Error is the faithful
// reading: log(0) cells make the objective infinite. ObservedSupport drops
// empty cells, which is the convention needed to evaluate the tau = 0,
// gamma = -1 members on empirical data at all.
enum class SklZeroCells { Error, ObservedSupport };

struct FitOptions {
  // NaN bounds fall back to the model's default bracket.
  double bracket_lo = std::numeric_limits<double>::quiet_NaN();
  double bracket_hi = std::numeric_limits<double>::quiet_NaN();
  int grid_points = 50;
  double theta_tol = 1e-9;
  int max_iter = 500;
  double tail_tol = 1e-12;
  SklZeroCells skl_zero_cells = SklZeroCells::Error;
};

struct EstimationResult {
  Vector theta_hat;
  double objective_value = 0.0;
  double ee_residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool boundary_hit = false;
};

// sum_x K(delta_n(x)) f_theta^{1+alpha}(x) u_theta(x) over the union of the
// data support and the model window; empty-data cells enter through
// delta = -1. Requires gamma > -1 (the S-divergence variant below covers
// the boundary).
Vector estimating_equation(const Vector& theta, const DiscreteDensity& dens,
                           const ParametricModel& model,
                           const TuningParams& p, double tail_tol = 1e-12);

// Same equation for the S-divergence objective S_(alpha,lambda).
Vector estimating_equation_sd(const Vector& theta, const DiscreteDensity& dens,
                              const ParametricModel& model, double alpha,
                              double lambda, double tail_tol = 1e-12);

// Minimum GSD estimation: coarse grid scan over the bracket, then
// golden-section refinement (Nelder-Mead for dim > 1 via custom start).
// The estimator is defined as the global minimizer over the bracket.
// gamma < -1 is rejected (empirical zero cells make the objective infinite);
// gamma = -1 is available through mgsde_sd with lambda_tau.
EstimationResult mgsde(const DiscreteDensity& dens, const ParametricModel& model,
                       const TuningParams& p, const FitOptions& opts = {});

// Minimum S-divergence estimation at explicit (alpha, lambda).
EstimationResult mgsde_sd(const DiscreteDensity& dens,
                          const ParametricModel& model, double alpha,
                          double lambda, const FitOptions& opts = {});

// Dispatch helper used by the simulation harness: routes gamma = -1 cells to
// the S-divergence objective at lambda_tau and everything else to mgsde.
EstimationResult fit_for_params(const DiscreteDensity& dens,
                                const ParametricModel& model,
                                const TuningParams& p,
                                const FitOptions& opts = {});

// Normal-location fit on a grid density (golden section over the bracket).
struct GridFitResult {
  double theta_hat = 0.0;
  double objective_value = 0.0;
  bool converged = false;
};
GridFitResult mgsde_grid(const GridDensity& data, const NormalGridModel& model,
                         const TuningParams& p, double bracket_lo,
                         double bracket_hi, double theta_tol = 1e-9);

}  // namespace gsdiv
