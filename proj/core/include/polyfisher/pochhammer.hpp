#pragma once

namespace polyfisher {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1) in sign/log-magnitude form,
/// so that products with hundreds of factors never overflow.
struct PochhammerValue {
  double log_abs; ///< ln |(a)_k|; -inf when the product contains a zero factor
  int sign;       ///< -1, 0 or +1

  /// sign * exp(log_abs). May overflow to +/-inf for very large k.
  double value() const;
};

/// (a)_k for k >= 0. k = 0 is the empty product (value 1). The sign is 0
/// exactly when a is a nonpositive integer with -a < k.
PochhammerValue pochhammer(double a, int k);

/// ln n!
double log_factorial(int n);

/// ln binomial(n, k) for 0 <= k <= n.
double log_binomial(int n, int k);

} // namespace polyfisher
