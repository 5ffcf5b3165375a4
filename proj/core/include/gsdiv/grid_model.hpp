#pragma once

#include "gsdiv/density.hpp"

namespace gsdiv {

// N(theta, sigma^2) location family discretized on a fixed uniform grid.
// Integrals become Riemann sums with weight h; the grid should cover
// roughly +/- 8 sigma around every theta of interest.
class NormalGridModel {
 public:
  NormalGridModel(double sigma, double grid_lo, double grid_hi, double h);

  double sigma() const { return sigma_; }
  double grid_lo() const { return lo_; }
  double grid_hi() const { return hi_; }
  double h() const { return h_; }
  std::size_t grid_size() const { return n_; }
  double point(std::size_t i) const { return lo_ + h_ * static_cast<double>(i); }

  GridDensity density(double theta) const;

  double pdf(double theta, double x) const;
  // u_theta(x) = (x - theta)/sigma^2
  double score(double theta, double x) const;
  // d u / d theta = -1/sigma^2
  double score_gradient() const;

 private:
  double sigma_;
  double lo_, hi_, h_;
  std::size_t n_;
};

// Affine image of a grid density under y = u*x + v (u != 0): values pick up
// the Jacobian 1/|u| and the cell width becomes h*|u|.
GridDensity affine_image(const GridDensity& g, double u, double v);

}  // namespace gsdiv
