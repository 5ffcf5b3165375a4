#include "gsdiv/density.hpp"

#include <algorithm>
#include <cmath>

#include "gsdiv/errors.hpp"

namespace gsdiv {

DiscreteDensity::DiscreteDensity(int support_start, std::vector<double> masses,
                                 double tail_bound)
    : start_(support_start), masses_(std::move(masses)), tail_bound_(tail_bound) {
  if (masses_.empty()) {
    throw DomainError("DiscreteDensity: empty mass vector");
  }
  for (double m : masses_) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw DomainError("DiscreteDensity: masses must be finite and nonnegative");
    }
  }
}

double DiscreteDensity::total_mass() const {
  double s = 0.0;
  for (double m : masses_) s += m;
  return s;
}

double DiscreteDensity::mean() const {
  double s = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    s += masses_[i];
    m1 += masses_[i] * static_cast<double>(start_ + static_cast<int>(i));
  }
  if (s <= 0.0) throw DomainError("DiscreteDensity: zero total mass");
  return m1 / s;
}

void DiscreteDensity::require_normalized(double eps) const {
  const double s = total_mass();
  if (s < 1.0 - tail_bound_ - eps || s > 1.0 + eps) {
    throw DomainError("DiscreteDensity: masses do not sum to one");
  }
}

AlignedPair align(const DiscreteDensity& g, const DiscreteDensity& f) {
  AlignedPair out;
  out.start = std::min(g.start(), f.start());
  const int end = std::max(g.end(), f.end());
  const std::size_t n = static_cast<std::size_t>(end - out.start + 1);
  out.g.resize(n);
  out.f.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int x = out.start + static_cast<int>(i);
    out.g[i] = g.at(x);
    out.f[i] = f.at(x);
  }
  return out;
}

double GridDensity::total_mass() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * h;
}

}  // namespace gsdiv
