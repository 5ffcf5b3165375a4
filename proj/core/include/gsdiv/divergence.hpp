#pragma once

#include <span>

#include "gsdiv/density.hpp"
#include "gsdiv/tuning.hpp"

namespace gsdiv {

// Named members of the family with their own closed forms.
enum class Family { GSD, SD, PD, DPD, GKL, SKL, SLD, SHD, KLD, LD, HD };

// Family selector plus whichever parameters that family needs.
struct DivergenceSpec {
  Family family = Family::KLD;
  double alpha = 0.0;   // GSD, SD, DPD, SKL, SLD, SHD
  double gamma = 0.0;   // GSD
  double tau = 0.0;     // GSD, GKL
  double lambda = 0.0;  // SD, PD
};

enum class GammaLimit { ToNeg1, ToAlpha };
enum class TauLimit { ToZero, ToOne };

// ---------------------------------------------------------------------------
// Span-level kernels. Inputs are already aligned cell-wise; `weight` is the
// quadrature cell width (1 for counting measure). All values clamp
// round-off negatives within 1e-12 of zero.
// ---------------------------------------------------------------------------
using Cells = std::span<const double>;

double gsd_cells(Cells g, Cells f, const TuningParams& p, double weight = 1.0);
double s_divergence_cells(Cells g, Cells f, double alpha, double lambda,
                          double weight = 1.0);
double skl_cells(Cells g, Cells f, double alpha, double weight = 1.0);
double sld_cells(Cells g, Cells f, double alpha, double weight = 1.0);
double gkl_cells(Cells g, Cells f, double tau, double weight = 1.0);
double pd_cells(Cells g, Cells f, double lambda, double weight = 1.0);
double dpd_cells(Cells g, Cells f, double alpha, double weight = 1.0);
double shd_cells(Cells g, Cells f, double alpha, double weight = 1.0);
double kld_cells(Cells g, Cells f, double weight = 1.0);
double ld_cells(Cells g, Cells f, double weight = 1.0);

// ---------------------------------------------------------------------------
// DiscreteDensity surface (union support, zero padded).
// ---------------------------------------------------------------------------

// Q_{(alpha,gamma,tau)}(g, f). Interior parameters use the closed form;
// tau in {0,1}, gamma = -1 and gamma = alpha dispatch to the limit
// evaluators below.
double gsd(const DiscreteDensity& g, const DiscreteDensity& f,
           const TuningParams& p);

// gamma -> -1 gives the S-divergence at lambda_tau; gamma -> alpha gives the
// log-blend family that generalizes GKL. Requires tau in (0,1).
double gsd_limit_gamma(const DiscreteDensity& g, const DiscreteDensity& f,
                       double alpha, double tau, GammaLimit target);

// tau -> 0 gives S_(alpha, gamma/(1-alpha)); tau -> 1 gives
// S_(alpha, (alpha-1-gamma)/(1-alpha)). Requires alpha < 1.
double gsd_limit_tau(const DiscreteDensity& g, const DiscreteDensity& f,
                     double alpha, double gamma, TauLimit target);

// S_(alpha,lambda)(g,f) with A = 1+lambda(1-alpha), B = alpha-lambda(1-alpha).
// |A| (resp. |B|) below the limit threshold evaluates the SKL (SLD) form.
double s_divergence(const DiscreteDensity& g, const DiscreteDensity& f,
                    double alpha, double lambda);

double special_divergence(const DiscreteDensity& g, const DiscreteDensity& f,
                          const DivergenceSpec& spec);

// ---------------------------------------------------------------------------
// GridDensity surface; both densities must share the grid.
// ---------------------------------------------------------------------------
double gsd(const GridDensity& g, const GridDensity& f, const TuningParams& p);
double s_divergence(const GridDensity& g, const GridDensity& f, double alpha,
                    double lambda);

// ---------------------------------------------------------------------------
// Residual-side scalar functions.
// ---------------------------------------------------------------------------

// Convex residual function C(delta) with C(0)=C'(0)=0, C''(0)=1+alpha;
// the divergence is the integral of C(g/f - 1) f^{1+alpha}.
double c_residual(double delta, const TuningParams& p);

// K(delta) from the estimating equation; K(0)=0, K'(0)=1. Dispatches to the
// S-divergence form ((1+delta)^A - 1)/A at the tau / gamma limits.
double k_function(double delta, const TuningParams& p);
double k_prime(double delta, const TuningParams& p);

// S-divergence K with explicit exponent A (A=0 means log(1+delta)).
double k_function_sd(double delta, double a);
double k_prime_sd(double delta, double a);

}  // namespace gsdiv
