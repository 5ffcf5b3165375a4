#include "gsdiv/grid_model.hpp"

#include <cmath>

#include "gsdiv/errors.hpp"

namespace gsdiv {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
}

NormalGridModel::NormalGridModel(double sigma, double grid_lo, double grid_hi,
                                 double h)
    : sigma_(sigma), lo_(grid_lo), hi_(grid_hi), h_(h) {
  if (!(sigma > 0.0)) throw DomainError("normal grid: sigma must be positive");
  if (!(h > 0.0) || !(grid_hi > grid_lo)) {
    throw DomainError("normal grid: invalid grid");
  }
  n_ = static_cast<std::size_t>(std::floor((hi_ - lo_) / h_ + 0.5)) + 1;
}

double NormalGridModel::pdf(double theta, double x) const {
  const double z = (x - theta) / sigma_;
  return kInvSqrt2Pi / sigma_ * std::exp(-0.5 * z * z);
}

double NormalGridModel::score(double theta, double x) const {
  return (x - theta) / (sigma_ * sigma_);
}

double NormalGridModel::score_gradient() const {
  return -1.0 / (sigma_ * sigma_);
}

GridDensity NormalGridModel::density(double theta) const {
  GridDensity d;
  d.x0 = lo_;
  d.h = h_;
  d.values.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) d.values[i] = pdf(theta, point(i));
  return d;
}

GridDensity affine_image(const GridDensity& g, double u, double v) {
  if (u == 0.0) throw DomainError("affine_image: scale must be nonzero");
  GridDensity out;
  const double au = std::abs(u);
  out.h = g.h * au;
  out.values.resize(g.values.size());
  if (u > 0.0) {
    out.x0 = u * g.x0 + v;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      out.values[i] = g.values[i] / au;
    }
  } else {
    // reverse so grid points stay increasing
    out.x0 = u * (g.x0 + g.h * static_cast<double>(g.values.size() - 1)) + v;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      out.values[i] = g.values[g.values.size() - 1 - i] / au;
    }
  }
  return out;
}

}  // namespace gsdiv
