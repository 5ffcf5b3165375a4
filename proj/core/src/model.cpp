#include "gsdiv/model.hpp"

#include <algorithm>
#include <cmath>

#include "gsdiv/errors.hpp"

namespace gsdiv {

namespace {

double theta1(const Vector& theta) { return theta(0); }

Vector vec1(double v) {
  Vector out(1);
  out(0) = v;
  return out;
}

}  // namespace

DiscreteDensity ParametricModel::densify(const Vector& theta,
                                         double tail_tol) const {
  validate_theta(theta);
  const SupportWindow w = support_window(theta, tail_tol);
  std::vector<double> masses(static_cast<std::size_t>(w.hi - w.lo + 1));
  for (int x = w.lo; x <= w.hi; ++x) {
    masses[static_cast<std::size_t>(x - w.lo)] = pmf(theta, x);
  }
  return DiscreteDensity(w.lo, std::move(masses), w.tail_bound);
}

int ParametricModel::sample_one(const Vector& theta, double u) const {
  const SupportWindow w = support_window(theta, 1e-12);
  double cum = 0.0;
  for (int x = w.lo; x <= w.hi; ++x) {
    cum += pmf(theta, x);
    if (u < cum) return x;
  }
  return w.hi;  // u fell into the truncated tail (< 1e-12 of the mass)
}

std::vector<int> ParametricModel::sample(const Vector& theta, int n,
                                         RngStream& rng) const {
  validate_theta(theta);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (auto& x : out) x = sample_one(theta, rng.next_uniform());
  return out;
}

double ParametricModel::pmf1(double theta, int x) const {
  return pmf(vec1(theta), x);
}

DiscreteDensity ParametricModel::densify1(double theta, double tail_tol) const {
  return densify(vec1(theta), tail_tol);
}

std::vector<int> ParametricModel::sample1(double theta, int n,
                                          RngStream& rng) const {
  return sample(vec1(theta), n, rng);
}

// --------------------------------------------------------------------------

namespace {

class PoissonModel final : public ParametricModel {
 public:
  std::string name() const override { return "poisson"; }
  int dim() const override { return 1; }

  void validate_theta(const Vector& theta) const override {
    if (theta.size() != 1 || !(theta1(theta) > 0.0)) {
      throw DomainError("poisson: mean must be positive");
    }
  }

  double pmf(const Vector& theta, int x) const override {
    if (x < 0) return 0.0;
    const double t = theta1(theta);
    return std::exp(static_cast<double>(x) * std::log(t) - t -
                    std::lgamma(static_cast<double>(x) + 1.0));
  }

  Vector score(const Vector& theta, int x) const override {
    return vec1(static_cast<double>(x) / theta1(theta) - 1.0);
  }

  Matrix score_gradient(const Vector& theta, int x) const override {
    Matrix out(1, 1);
    const double t = theta1(theta);
    out(0, 0) = -static_cast<double>(x) / (t * t);
    return out;
  }

  SupportWindow support_window(const Vector& theta,
                               double tail_tol) const override {
    const double t = theta1(theta);
    // walk the pmf recurrence until the remaining tail drops below tol
    double p = std::exp(-t);
    double cum = p;
    int x = 0;
    const int hard_cap = 16 * 1024;
    while (1.0 - cum >= tail_tol && x < hard_cap) {
      ++x;
      p *= t / static_cast<double>(x);
      cum += p;
    }
    return {0, x, std::max(0.0, 1.0 - cum)};
  }

  std::pair<double, double> default_bracket(
      const DiscreteDensity& data) const override {
    const double m = data.mean();
    return {std::max(0.5 * m, 1e-6), 2.0 * m + 1.0};
  }
};

class GeometricModel final : public ParametricModel {
 public:
  std::string name() const override { return "geometric"; }
  int dim() const override { return 1; }

  void validate_theta(const Vector& theta) const override {
    const double p = theta1(theta);
    if (theta.size() != 1 || !(p > 0.0) || !(p < 1.0)) {
      throw DomainError("geometric: success probability must lie in (0,1)");
    }
  }

  double pmf(const Vector& theta, int x) const override {
    if (x < 0) return 0.0;
    const double p = theta1(theta);
    return p * std::exp(static_cast<double>(x) * std::log1p(-p));
  }

  Vector score(const Vector& theta, int x) const override {
    const double p = theta1(theta);
    return vec1(1.0 / p - static_cast<double>(x) / (1.0 - p));
  }

  Matrix score_gradient(const Vector& theta, int x) const override {
    Matrix out(1, 1);
    const double p = theta1(theta);
    out(0, 0) = -1.0 / (p * p) - static_cast<double>(x) / ((1.0 - p) * (1.0 - p));
    return out;
  }

  SupportWindow support_window(const Vector& theta,
                               double tail_tol) const override {
    const double p = theta1(theta);
    // tail beyond x is (1-p)^{x+1}
    const int hi = std::max(
        0, static_cast<int>(std::ceil(std::log(tail_tol) / std::log1p(-p))));
    return {0, hi, std::pow(1.0 - p, hi + 1)};
  }

  std::pair<double, double> default_bracket(
      const DiscreteDensity& data) const override {
    const double phat = 1.0 / (1.0 + data.mean());
    return {std::max(1e-4, 0.5 * phat), std::min(1.0 - 1e-6, 2.0 * phat)};
  }
};

class BinomialModel final : public ParametricModel {
 public:
  explicit BinomialModel(int m) : m_(m) {
    if (m < 1) throw DomainError("binomial: m must be >= 1");
  }

  std::string name() const override { return "binomial"; }
  int dim() const override { return 1; }
  int trials() const { return m_; }

  void validate_theta(const Vector& theta) const override {
    const double p = theta1(theta);
    if (theta.size() != 1 || !(p > 0.0) || !(p < 1.0)) {
      throw DomainError("binomial: success probability must lie in (0,1)");
    }
  }

  double pmf(const Vector& theta, int x) const override {
    if (x < 0 || x > m_) return 0.0;
    const double p = theta1(theta);
    const double md = static_cast<double>(m_);
    const double xd = static_cast<double>(x);
    return std::exp(std::lgamma(md + 1.0) - std::lgamma(xd + 1.0) -
                    std::lgamma(md - xd + 1.0) + xd * std::log(p) +
                    (md - xd) * std::log1p(-p));
  }

  Vector score(const Vector& theta, int x) const override {
    const double p = theta1(theta);
    return vec1(static_cast<double>(x) / p -
                static_cast<double>(m_ - x) / (1.0 - p));
  }

  Matrix score_gradient(const Vector& theta, int x) const override {
    Matrix out(1, 1);
    const double p = theta1(theta);
    out(0, 0) = -static_cast<double>(x) / (p * p) -
                static_cast<double>(m_ - x) / ((1.0 - p) * (1.0 - p));
    return out;
  }

  SupportWindow support_window(const Vector&, double) const override {
    return {0, m_, 0.0};
  }

  std::pair<double, double> default_bracket(
      const DiscreteDensity& data) const override {
    const double phat =
        std::clamp(data.mean() / static_cast<double>(m_), 1e-4, 1.0 - 1e-4);
    return {std::max(1e-4, 0.5 * phat), std::min(1.0 - 1e-4, 2.0 * phat + 0.05)};
  }

 private:
  int m_;
};

}  // namespace

std::unique_ptr<ParametricModel> poisson_model() {
  return std::make_unique<PoissonModel>();
}

std::unique_ptr<ParametricModel> geometric_model() {
  return std::make_unique<GeometricModel>();
}

std::unique_ptr<ParametricModel> binomial_model(int m) {
  return std::make_unique<BinomialModel>(m);
}

std::unique_ptr<ParametricModel> model_by_name(const std::string& name) {
  if (name == "poisson") return poisson_model();
  if (name == "geometric") return geometric_model();
  if (name.rfind("binomial:", 0) == 0) {
    return binomial_model(std::stoi(name.substr(9)));
  }
  throw DomainError("unknown model '" + name + "'");
}

}  // namespace gsdiv
