#pragma once

#include <cstddef>
#include <vector>

namespace gsdiv {

// Nonnegative mass function on a contiguous integer window.
//
// Masses are not forced to sum to one: model truncation leaves a recorded
// tail_bound, and the adequacy-test blend densities are intentionally
// unnormalized. Callers that need a probability vector use
// require_normalized().
class DiscreteDensity {
 public:
  DiscreteDensity(int support_start, std::vector<double> masses,
                  double tail_bound = 0.0);

  int start() const { return start_; }
  int end() const { return start_ + static_cast<int>(masses_.size()) - 1; }
  std::size_t size() const { return masses_.size(); }
  double tail_bound() const { return tail_bound_; }
  const std::vector<double>& masses() const { return masses_; }

  // Zero outside the window.
  double at(int x) const {
    const int i = x - start_;
    if (i < 0 || i >= static_cast<int>(masses_.size())) return 0.0;
    return masses_[static_cast<std::size_t>(i)];
  }

  double total_mass() const;
  // First moment normalized by total mass.
  double mean() const;

  void require_normalized(double eps = 1e-9) const;

 private:
  int start_;
  std::vector<double> masses_;
  double tail_bound_;
};

// Zero-padded union support of two densities.
struct AlignedPair {
  int start = 0;
  std::vector<double> g;
  std::vector<double> f;
};

AlignedPair align(const DiscreteDensity& g, const DiscreteDensity& f);

// Uniformly spaced grid representation of a continuous density; integrals
// are Riemann sums with cell width h.
struct GridDensity {
  double x0 = 0.0;
  double h = 1.0;
  std::vector<double> values;

  double point(std::size_t i) const { return x0 + h * static_cast<double>(i); }
  double total_mass() const;
};

}  // namespace gsdiv
