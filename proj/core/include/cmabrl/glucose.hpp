#pragma once

namespace cmabrl {

// Piecewise-linear score of a continuous glucose reading in mg/dL:
// 0 at or below 80, ramp up to 1 across [80, 90], 1 on [90, 130],
// ramp down to 0 across [130, 180], 0 at or above 180.
inline double glucose_reward(double cgm) {
  if (cgm <= 80.0) return 0.0;
  if (cgm <= 90.0) return (cgm - 80.0) / 10.0;
  if (cgm <= 130.0) return 1.0;
  if (cgm <= 180.0) return (180.0 - cgm) / 50.0;
  return 0.0;
}

}  // namespace cmabrl
