#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gsdiv/density.hpp"
#include "gsdiv/rng.hpp"

namespace gsdiv {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct SupportWindow {
  int lo = 0;
  int hi = 0;
  double tail_bound = 0.0;  // mass outside [lo, hi]
};

// Discrete parametric family: pmf, analytic score u_theta and score gradient
// (both supplied in closed form per family, never by numeric
// differentiation), truncation window, inversion sampler.
//
// Models are immutable after construction. Samplers take the caller's RNG
// stream, so concurrent use needs one stream per thread.
class ParametricModel {
 public:
  virtual ~ParametricModel() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  virtual void validate_theta(const Vector& theta) const = 0;

  virtual double pmf(const Vector& theta, int x) const = 0;
  virtual Vector score(const Vector& theta, int x) const = 0;
  virtual Matrix score_gradient(const Vector& theta, int x) const = 0;

  // Smallest window [lo, hi] whose complement carries mass < tail_tol.
  virtual SupportWindow support_window(const Vector& theta,
                                       double tail_tol) const = 0;

  // Search bracket for scalar-parameter fitting, derived from the data mean.
  virtual std::pair<double, double> default_bracket(
      const DiscreteDensity& data) const = 0;

  // Truncated pmf as a density (sum >= 1 - tail_tol).
  DiscreteDensity densify(const Vector& theta, double tail_tol = 1e-12) const;

  // CDF inversion inside the truncation window: one uniform per draw.
  int sample_one(const Vector& theta, double u) const;
  std::vector<int> sample(const Vector& theta, int n, RngStream& rng) const;

  // Scalar-theta conveniences; every shipped family has dim() == 1.
  double pmf1(double theta, int x) const;
  DiscreteDensity densify1(double theta, double tail_tol = 1e-12) const;
  std::vector<int> sample1(double theta, int n, RngStream& rng) const;
};

// theta = mean > 0; u(x) = x/theta - 1, grad u(x) = -x/theta^2.
std::unique_ptr<ParametricModel> poisson_model();

// theta = success probability in (0,1); pmf(x) = p (1-p)^x on x >= 0.
std::unique_ptr<ParametricModel> geometric_model();

// theta = success probability in (0,1); finite support [0, m].
std::unique_ptr<ParametricModel> binomial_model(int m);

std::unique_ptr<ParametricModel> model_by_name(const std::string& name);

}  // namespace gsdiv
