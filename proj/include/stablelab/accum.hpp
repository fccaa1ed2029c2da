#pragma once

#include <cmath>

namespace stablelab {

/// Neumaier compensated running sum. Long prefix sums with cancellation
/// (10^6 terms) need better than plain accumulation to hold the 1e-9
/// relative identities the tests assert.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace stablelab
