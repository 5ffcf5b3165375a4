#include "gsdiv/divergence.hpp"

#include <cmath>
#include <optional>

#include "gsdiv/errors.hpp"

namespace gsdiv {

namespace {

// Round-off can leave a divergence a few ulp below zero when g ~ f.
double clamp_tiny_negative(double v) {
  if (v < 0.0 && v > -1e-12) return 0.0;
  return v;
}

void check_same_grid(const GridDensity& g, const GridDensity& f) {
  if (g.values.size() != f.values.size() || g.x0 != f.x0 || g.h != f.h) {
    throw DomainError("grid divergence: densities must share the grid");
  }
}

// Interior closed form, written cell-wise as
//   tau g^{1+a} + (1-tau) f^{1+a} - (tau g^{1+c} + (1-tau) f^{1+c})^{(1+a)/(1+c)}
// which is Eq.-level algebraically identical to the ratio form but stays
// finite on zero cells for gamma > -1 (and on f = 0 cells for gamma < -1,
// where IEEE 0^neg = inf, inf^neg = 0 realizes the limit).
double gsd_interior_cells(Cells g, Cells f, double alpha, double gamma,
                          double tau, double weight) {
  const double tb = 1.0 - tau;
  const double e1 = 1.0 + alpha;
  const double e2 = 1.0 + gamma;
  const double ex = e1 / e2;
  if (gamma < -1.0) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0.0 && f[i] > 0.0) {
        throw DomainError("gsd: gamma <= -1 requires g > 0 wherever f > 0");
      }
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (gv == 0.0 && fv == 0.0) continue;
    const double m = tau * std::pow(gv, e2) + tb * std::pow(fv, e2);
    sum += tau * std::pow(gv, e1) + tb * std::pow(fv, e1) - std::pow(m, ex);
  }
  return clamp_tiny_negative(weight * sum / (tau * tb * (alpha - gamma)));
}

// gamma -> alpha limit: the log-blend family
//   int g^{1+a}/tb log(g/f)
//   - 1/(1+a) int (g^{1+a}/tb + f^{1+a}/tau) log(tau (g/f)^{1+a} + tb),
// evaluated through log(tau g^{1+a} + tb f^{1+a}) so zero cells close:
// a g = 0 cell leaves -(f^{1+a}/tau) log(tb)/(1+a), an f = 0 cell leaves
// -(g^{1+a}/tb) log(tau)/(1+a).
double gsd_gamma_eq_alpha_cells(Cells g, Cells f, double alpha, double tau,
                                double weight) {
  const double tb = 1.0 - tau;
  const double e1 = 1.0 + alpha;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (gv == 0.0 && fv == 0.0) continue;
    if (gv == 0.0) {
      sum += -std::pow(fv, e1) / tau * std::log(tb) / e1;
      continue;
    }
    if (fv == 0.0) {
      sum += -std::pow(gv, e1) / tb * std::log(tau) / e1;
      continue;
    }
    const double g1 = std::pow(gv, e1);
    const double f1 = std::pow(fv, e1);
    const double lg = std::log(gv), lf = std::log(fv);
    sum += g1 / tb * (lg - lf) -
           (g1 / tb + f1 / tau) *
               (std::log(tau * g1 + tb * f1) - e1 * lf) / e1;
  }
  return clamp_tiny_negative(weight * sum);
}

}  // namespace

double skl_cells(Cells g, Cells f, double alpha, double weight) {
  if (alpha < 0.0) throw DomainError("SKL: requires alpha >= 0");
  const double e1 = 1.0 + alpha;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (fv == 0.0) {
      // 0 log 0 closes the first term; only the mass term survives
      sum += std::pow(gv, e1) / e1;
      continue;
    }
    if (gv == 0.0) {
      throw DomainError("SKL: log of zero with positive weight (g = 0 < f)");
    }
    const double f1 = std::pow(fv, e1);
    sum += f1 * (std::log(fv) - std::log(gv)) - (f1 - std::pow(gv, e1)) / e1;
  }
  return clamp_tiny_negative(weight * sum);
}

double sld_cells(Cells g, Cells f, double alpha, double weight) {
  if (alpha < 0.0) throw DomainError("SLD: requires alpha >= 0");
  const double e1 = 1.0 + alpha;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (gv == 0.0) {
      sum += std::pow(fv, e1) / e1;
      continue;
    }
    if (fv == 0.0) {
      throw DomainError("SLD: log of zero with positive weight (f = 0 < g)");
    }
    const double g1 = std::pow(gv, e1);
    sum += g1 * (std::log(gv) - std::log(fv)) - (g1 - std::pow(fv, e1)) / e1;
  }
  return clamp_tiny_negative(weight * sum);
}

double s_divergence_cells(Cells g, Cells f, double alpha, double lambda,
                          double weight) {
  const auto [A, B] = sd_constants(alpha, lambda);
  if (std::abs(A) < kLimitEps) return skl_cells(g, f, alpha, weight);
  if (std::abs(B) < kLimitEps) return sld_cells(g, f, alpha, weight);
  const double e1 = 1.0 + alpha;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (gv == 0.0 && fv == 0.0) continue;
    if (A < 0.0 && gv == 0.0) {
      throw DomainError("s_divergence: g^A diverges (A < 0, g = 0 < f)");
    }
    if (B < 0.0 && fv == 0.0) {
      throw DomainError("s_divergence: f^B diverges (B < 0, f = 0 < g)");
    }
    sum += std::pow(fv, e1) / A - e1 / (A * B) * std::pow(fv, B) * std::pow(gv, A) +
           std::pow(gv, e1) / B;
  }
  return clamp_tiny_negative(weight * sum);
}

double gkl_cells(Cells g, Cells f, double tau, double weight) {
  if (tau <= 0.0 || tau >= 1.0) {
    throw DomainError("GKL: requires tau in (0,1)");
  }
  const double tb = 1.0 - tau;
  double sum = 0.0;
  // symmetric rearrangement g/tb log g + f/tau log f - (g/tb + f/tau) log(tau g + tb f)
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (gv == 0.0 && fv == 0.0) continue;
    double cell = -(gv / tb + fv / tau) * std::log(tau * gv + tb * fv);
    if (gv > 0.0) cell += gv / tb * std::log(gv);
    if (fv > 0.0) cell += fv / tau * std::log(fv);
    sum += cell;
  }
  return clamp_tiny_negative(weight * sum);
}

double kld_cells(Cells g, Cells f, double weight) {
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (fv == 0.0) continue;  // 0 log 0 = 0
    if (gv == 0.0) {
      throw DomainError("KLD: log of zero with positive weight (g = 0 < f)");
    }
    sum += fv * (std::log(fv) - std::log(gv));
  }
  return clamp_tiny_negative(weight * sum);
}

double ld_cells(Cells g, Cells f, double weight) {
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (gv == 0.0) continue;
    if (fv == 0.0) {
      throw DomainError("LD: log of zero with positive weight (f = 0 < g)");
    }
    sum += gv * (std::log(gv) - std::log(fv));
  }
  return clamp_tiny_negative(weight * sum);
}

double pd_cells(Cells g, Cells f, double lambda, double weight) {
  if (std::abs(lambda) < kLimitEps) return ld_cells(g, f, weight);
  if (std::abs(lambda + 1.0) < kLimitEps) return kld_cells(g, f, weight);
  const double e1 = 1.0 + lambda;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (gv == 0.0 && fv == 0.0) continue;
    if (gv == 0.0 && e1 < 0.0) {
      throw DomainError("PD: g^{1+lambda} diverges (lambda < -1, g = 0 < f)");
    }
    if (fv == 0.0 && lambda > 0.0 && gv > 0.0) {
      throw DomainError("PD: f^{-lambda} diverges (lambda > 0, f = 0 < g)");
    }
    // g ((g/f)^lambda - 1) written as g^{1+lambda} f^{-lambda} - g
    sum += std::pow(gv, e1) * std::pow(fv, -lambda) - gv;
  }
  return clamp_tiny_negative(weight * sum / (lambda * (lambda + 1.0)));
}

double dpd_cells(Cells g, Cells f, double alpha, double weight) {
  if (alpha <= 0.0) {
    throw DomainError("DPD: requires alpha > 0 (alpha -> 0 is the LD)");
  }
  const double e1 = 1.0 + alpha;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gv = g[i], fv = f[i];
    if (gv == 0.0 && fv == 0.0) continue;
    sum += std::pow(fv, e1) - e1 / alpha * std::pow(fv, alpha) * gv +
           std::pow(gv, e1) / alpha;
  }
  return clamp_tiny_negative(weight * sum);
}

double shd_cells(Cells g, Cells f, double alpha, double weight) {
  if (alpha < 0.0) throw DomainError("SHD: requires alpha >= 0");
  const double e = (1.0 + alpha) / 2.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double d = std::pow(g[i], e) - std::pow(f[i], e);
    sum += d * d;
  }
  return weight * 2.0 / (1.0 + alpha) * sum;
}

double gsd_cells(Cells g, Cells f, const TuningParams& p, double weight) {
  p.validate();
  if (p.tau_at_zero()) {
    if (!(p.alpha < 1.0 - kLimitEps)) {
      throw DomainError("gsd: tau -> 0 limit undefined at alpha = 1");
    }
    return s_divergence_cells(g, f, p.alpha, p.gamma / (1.0 - p.alpha), weight);
  }
  if (p.tau_at_one()) {
    if (!(p.alpha < 1.0 - kLimitEps)) {
      throw DomainError("gsd: tau -> 1 limit undefined at alpha = 1");
    }
    return s_divergence_cells(g, f, p.alpha,
                              (p.alpha - 1.0 - p.gamma) / (1.0 - p.alpha),
                              weight);
  }
  if (p.gamma_at_neg1()) {
    if (!(p.alpha < 1.0 - kLimitEps)) {
      throw DomainError("gsd: gamma -> -1 limit undefined at alpha = 1");
    }
    return s_divergence_cells(g, f, p.alpha, p.lambda_tau(), weight);
  }
  if (p.gamma_at_alpha()) {
    return gsd_gamma_eq_alpha_cells(g, f, p.alpha, p.tau, weight);
  }
  return gsd_interior_cells(g, f, p.alpha, p.gamma, p.tau, weight);
}

// --------------------------------------------------------------------------
// DiscreteDensity / GridDensity surfaces
// --------------------------------------------------------------------------

double gsd(const DiscreteDensity& g, const DiscreteDensity& f,
           const TuningParams& p) {
  const AlignedPair a = align(g, f);
  return gsd_cells(a.g, a.f, p);
}

double gsd_limit_gamma(const DiscreteDensity& g, const DiscreteDensity& f,
                       double alpha, double tau, GammaLimit target) {
  TuningParams p{alpha, 0.0, tau};
  p.validate();
  if (p.tau_at_zero() || p.tau_at_one()) {
    throw DomainError(
        "gsd_limit_gamma: tau in {0,1}; compose with gsd_limit_tau instead");
  }
  const AlignedPair a = align(g, f);
  if (target == GammaLimit::ToNeg1) {
    return s_divergence_cells(a.g, a.f, alpha, lambda_of_tau(alpha, tau));
  }
  return gsd_gamma_eq_alpha_cells(a.g, a.f, alpha, tau, 1.0);
}

double gsd_limit_tau(const DiscreteDensity& g, const DiscreteDensity& f,
                     double alpha, double gamma, TauLimit target) {
  if (!(alpha < 1.0 - kLimitEps)) {
    throw DomainError("gsd_limit_tau: requires alpha < 1");
  }
  const double lambda = target == TauLimit::ToZero
                            ? gamma / (1.0 - alpha)
                            : (alpha - 1.0 - gamma) / (1.0 - alpha);
  return s_divergence(g, f, alpha, lambda);
}

double s_divergence(const DiscreteDensity& g, const DiscreteDensity& f,
                    double alpha, double lambda) {
  const AlignedPair a = align(g, f);
  return s_divergence_cells(a.g, a.f, alpha, lambda);
}

double special_divergence(const DiscreteDensity& g, const DiscreteDensity& f,
                          const DivergenceSpec& spec) {
  const AlignedPair a = align(g, f);
  switch (spec.family) {
    case Family::GSD:
      return gsd_cells(a.g, a.f, TuningParams{spec.alpha, spec.gamma, spec.tau});
    case Family::SD:
      return s_divergence_cells(a.g, a.f, spec.alpha, spec.lambda);
    case Family::PD:
      return pd_cells(a.g, a.f, spec.lambda);
    case Family::DPD:
      return dpd_cells(a.g, a.f, spec.alpha);
    case Family::GKL:
      return gkl_cells(a.g, a.f, spec.tau);
    case Family::SKL:
      return skl_cells(a.g, a.f, spec.alpha);
    case Family::SLD:
      return sld_cells(a.g, a.f, spec.alpha);
    case Family::SHD:
      return shd_cells(a.g, a.f, spec.alpha);
    case Family::KLD:
      return kld_cells(a.g, a.f);
    case Family::LD:
      return ld_cells(a.g, a.f);
    case Family::HD:
      return shd_cells(a.g, a.f, 0.0);
  }
  throw DomainError("special_divergence: unknown family");
}

double gsd(const GridDensity& g, const GridDensity& f, const TuningParams& p) {
  check_same_grid(g, f);
  return gsd_cells(g.values, f.values, p, g.h);
}

double s_divergence(const GridDensity& g, const GridDensity& f, double alpha,
                    double lambda) {
  check_same_grid(g, f);
  return s_divergence_cells(g.values, f.values, alpha, lambda, g.h);
}

// --------------------------------------------------------------------------
// Residual-side functions
// --------------------------------------------------------------------------

double c_residual(double delta, const TuningParams& p) {
  p.validate();
  if (delta < -1.0) throw DomainError("c_residual: requires delta >= -1");
  if (p.tau_at_zero() || p.tau_at_one() || p.gamma_at_alpha()) {
    throw DomainError("c_residual: requires interior parameters");
  }
  const double tb = p.tau_bar();
  const double e1 = 1.0 + p.alpha;
  const double e2 = 1.0 + p.gamma;
  const double dp1 = delta + 1.0;
  const double m = p.tau * std::pow(dp1, e2) + tb;
  const double v =
      (p.tau * std::pow(dp1, e1) + tb - std::pow(m, e1 / e2)) /
      (p.tau * tb * (p.alpha - p.gamma));
  return clamp_tiny_negative(v);
}

double k_function_sd(double delta, double a) {
  if (delta < -1.0) throw DomainError("k_function: requires delta >= -1");
  if (std::abs(a) < kLimitEps) {
    if (delta == -1.0) {
      throw DomainError("k_function: log(0) at delta = -1 with A = 0");
    }
    return std::log1p(delta);
  }
  return (std::pow(delta + 1.0, a) - 1.0) / a;
}

double k_prime_sd(double delta, double a) {
  if (delta < -1.0) throw DomainError("k_prime: requires delta >= -1");
  return std::pow(delta + 1.0, a - 1.0);
}

namespace {

// Exponent of the S-divergence form that K degenerates to at the parameter
// boundaries; nullopt means the genuinely three-parameter interior form.
std::optional<double> k_sd_exponent(const TuningParams& p) {
  if (p.tau_at_zero()) return 1.0 + p.gamma;
  if (p.tau_at_one()) return p.alpha - p.gamma;
  if (p.gamma_at_neg1()) return p.tau * (1.0 + p.alpha);
  return std::nullopt;
}

}  // namespace

double k_function(double delta, const TuningParams& p) {
  p.validate();
  if (delta < -1.0) throw DomainError("k_function: requires delta >= -1");
  if (const auto a = k_sd_exponent(p)) return k_function_sd(delta, *a);
  const double tb = p.tau_bar();
  const double e2 = 1.0 + p.gamma;
  const double m = p.tau * std::pow(delta + 1.0, e2) + tb;
  const double v = (std::pow(m, (p.alpha - p.gamma) / e2) - 1.0) /
                   (p.tau * (p.alpha - p.gamma));
  if (!std::isfinite(v)) throw DomainError("k_function: divergent evaluation");
  return v;
}

double k_prime(double delta, const TuningParams& p) {
  p.validate();
  if (delta < -1.0) throw DomainError("k_prime: requires delta >= -1");
  if (const auto a = k_sd_exponent(p)) return k_prime_sd(delta, *a);
  const double tb = p.tau_bar();
  const double e2 = 1.0 + p.gamma;
  const double dp1 = delta + 1.0;
  const double m = p.tau * std::pow(dp1, e2) + tb;
  return std::pow(dp1, p.gamma) *
         std::pow(m, (p.alpha - 2.0 * p.gamma - 1.0) / e2);
}

}  // namespace gsdiv
