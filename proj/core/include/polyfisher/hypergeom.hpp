#pragma once

#include <optional>
#include <vector>

namespace polyfisher {

/// Substitution z(theta) and its derivative z'(theta) that turns the generic
/// terminating hypergeometric polynomial into a concrete family. `c` is the
/// denominator parameter of the 2F1 form (Krawtchouk stores -N here); it is
/// absent for the 2F0 form.
struct ZMap {
  double z;
  double dz;
  std::optional<double> c;
};

/// Values P_0(x), ..., P_degree(x) at one argument.
struct PolyEval {
  double x;
  int degree;
  std::vector<double> values;
};

/// 2F1(-n, -x; c; z) summed k = 0..n, left to right, with the running term
/// updated multiplicatively. Throws DomainError if a denominator factor
/// (c + k) vanishes while the running term is still nonzero.
double series_2f1_terminating(int n, double x, double c, double z);

/// 2F0(-n, -x; -; z) summed k = 0..n.
double series_2f0_terminating(int n, double x, double z);

/// Upward three-term recurrence for the 2F1 form,
///   (m + c) P_{m+1} = -[(m - x) z - 2m - c] P_m + m (z - 1) P_{m-1},
/// started from P_0 = 1 with the P_{-1} coefficient equal to 0. Throws
/// DomainError when m + c = 0 is reached before degree n.
PolyEval recurrence_2f1(int n, double x, const ZMap& map);

/// Upward three-term recurrence for the 2F0 form,
///   P_{m+1} = -[(m - x) z - 1] P_m + m z P_{m-1}.
PolyEval recurrence_2f0(int n, double x, double z);

/// Parameter derivative dP_n/dtheta = n (z'/z) [P_n(x) - P_{n-1}(x)].
/// `polys` must hold values up to degree n at the same x; n = 0 returns 0.
double dtheta_poly(int n, double x, const ZMap& map, const PolyEval& polys);

} // namespace polyfisher
