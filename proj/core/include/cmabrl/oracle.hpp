#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace cmabrl {

struct OracleConfig {
  int resolution = 1000;    // grid points per scanned arm dimension
  double tolerance = 1e-3;  // guaranteed accuracy of the reported maximum

  void validate() const {
    if (resolution < 2)
      throw std::invalid_argument("OracleConfig: resolution >= 2");
    if (!(tolerance > 0.0))
      throw std::invalid_argument("OracleConfig: tolerance > 0");
  }
};

// Maximum of f over the grid {j/(resolution-1)} on the scanned arm
// dimensions, remaining dimensions fixed at fill. Stops early once a value
// reaches cap (an environment-known upper bound on f). f receives the full
// arm vector as a span.
template <typename F>
double grid_scan_max(int arm_dim, std::span<const int> scan_dims,
                     int resolution, double fill, double cap, F&& f) {
  if (resolution < 2)
    throw std::invalid_argument("grid_scan_max: resolution >= 2");
  std::vector<double> arm(static_cast<std::size_t>(arm_dim), fill);
  std::vector<int> digits(scan_dims.size(), 0);
  const double step = 1.0 / (resolution - 1);

  double best = -std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t i = 0; i < scan_dims.size(); ++i) {
      arm[static_cast<std::size_t>(scan_dims[i])] = digits[i] * step;
    }
    const double value = f(std::span<const double>(arm));
    if (value > best) {
      best = value;
      if (best >= cap) return best;
    }
    // Odometer over the scanned dimensions, last fastest.
    std::size_t pos = scan_dims.size();
    while (pos > 0) {
      if (++digits[pos - 1] < resolution) break;
      digits[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return best;
}

}  // namespace cmabrl
