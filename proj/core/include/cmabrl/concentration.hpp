#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace cmabrl {

// Self-normalized confidence radius for the sample mean of N observations
// with conditionally 1-sub-Gaussian noise. With probability at least
// 1 - delta,
//
//   |sample mean - true mean| <= sqrt( (2/N) * (1 + 2*ln( sqrt(1+N)/delta )) )
//
// simultaneously over all N >= 1.
inline double selfnormalized_bound(std::int64_t n, double delta) {
  if (n < 1) throw std::domain_error("selfnormalized_bound: N >= 1 required");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("selfnormalized_bound: delta in (0,1) required");
  const double nn = static_cast<double>(n);
  return std::sqrt((2.0 / nn) *
                   (1.0 + 2.0 * std::log(std::sqrt(1.0 + nn) / delta)));
}

}  // namespace cmabrl
