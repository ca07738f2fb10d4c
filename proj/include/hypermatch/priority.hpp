#pragma once

#include <cmath>

namespace hypermatch {

/// Rate function f(x) = e^x / (e+1) driving the water-filling algorithm.
/// It is its own antiderivative up to the constant f(0), which gives the
/// closed-form dual values.
inline double fill_rate(double load) { return std::exp(load) / (M_E + 1.0); }

/// Load at which a fresh partner edge sits exactly on the threshold:
/// 2 f(L) = 1, i.e. L = ln((e+1)/2).
inline const double kSymmetricThresholdLoad = std::log((M_E + 1.0) / 2.0);

/// Competitive ratio of water-filling on 3-uniform hypergraphs: (e-1)/(e+1).
inline const double kWaterfillRatio = (M_E - 1.0) / (M_E + 1.0);

/// Linear-profile coefficients tying node loads to the binomial midpoint CDF:
/// scale = 2 - 2 ln((e+1)/2), offset = 2 ln((e+1)/2) - 1. They sum to 1.
inline const double kProfileScale = 2.0 - 2.0 * kSymmetricThresholdLoad;
inline const double kProfileOffset = 2.0 * kSymmetricThresholdLoad - 1.0;

} // namespace hypermatch
