#pragma once

#include <span>

namespace thermoqubit {

/// Associated Laguerre polynomial L_n^k(x) by the upward three-term
/// recurrence. Plain double arithmetic: for large n and x the value itself
/// can exceed the double range; use the weighted forms below for that.
double laguerre_assoc(int n, int k, double x);

/// out[n] = exp(log_weight) · L_n^k(x) for n = 0 .. out.size()-1, with the
/// running product kept in a rescaled form so neither factor overflows.
void laguerre_weighted(int k, double x, double log_weight, std::span<double> out);

/// out[n] = √(n!/(n+k)!) · x^{k/2} · e^{−x/2} · L_n^k(x), the orthonormal
/// Laguerre functions, |out[n]| <= 1.
void laguerre_normalized(int k, double x, std::span<double> out);

}  // namespace thermoqubit
