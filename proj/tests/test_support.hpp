#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sequence.hpp"

namespace fracspec::testing {

inline RealSequence random_sequence(std::mt19937_64& rng, std::size_t length, double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> value(lo, hi);
  std::vector<double> samples(length);
  for (double& v : samples) v = value(rng);
  return RealSequence(std::move(samples));
}

inline RealSequence sequence(std::initializer_list<double> values) { return RealSequence(std::vector<double>(values)); }

/// |actual - expected| <= tol * max(1, |expected|)
inline bool close(double actual, double expected, double tol) {
  return std::abs(actual - expected) <= tol * std::max(1.0, std::abs(expected));
}

}  // namespace fracspec::testing
