#include "thermoqubit/laguerre.hpp"

#include <cmath>
#include <stdexcept>

namespace thermoqubit {

namespace {

constexpr double kRescaleAbove = 1e100;
const double kLogRescale = std::log(kRescaleAbove);

// Tracks exp(log_scale) as a plain factor while it is representable.
class ScaledValue {
 public:
  explicit ScaledValue(double log_scale) { set(log_scale); }

  void shift(double delta) { set(log_scale_ + delta); }

  double apply(double mantissa) const {
    if (mantissa == 0.0) return 0.0;
    if (representable_) return mantissa * factor_;
    const double mag = std::exp(log_scale_ + std::log(std::abs(mantissa)));
    return mantissa < 0.0 ? -mag : mag;
  }

 private:
  void set(double log_scale) {
    log_scale_ = log_scale;
    representable_ = log_scale > -700.0 && log_scale < 700.0;
    factor_ = representable_ ? std::exp(log_scale) : 0.0;
  }

  double log_scale_ = 0.0;
  double factor_ = 1.0;
  bool representable_ = true;
};

}  // namespace

double laguerre_assoc(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::invalid_argument("laguerre_assoc: n and k must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int m = 2; m <= n; ++m) {
    const double next = ((2.0 * m - 1.0 + k - x) * cur - (m - 1.0 + k) * prev) / m;
    prev = cur;
    cur = next;
  }
  return cur;
}

void laguerre_weighted(int k, double x, double log_weight, std::span<double> out) {
  if (k < 0) throw std::invalid_argument("laguerre_weighted: k must be non-negative");
  if (out.empty()) return;
  ScaledValue scale(log_weight);
  double prev = 1.0;
  out[0] = scale.apply(prev);
  if (out.size() == 1) return;
  double cur = 1.0 + k - x;
  out[1] = scale.apply(cur);
  for (std::size_t m = 2; m < out.size(); ++m) {
    const double dm = static_cast<double>(m);
    double next = ((2.0 * dm - 1.0 + k - x) * cur - (dm - 1.0 + k) * prev) / dm;
    if (std::abs(next) > kRescaleAbove) {
      next /= kRescaleAbove;
      cur /= kRescaleAbove;
      scale.shift(kLogRescale);
    }
    prev = cur;
    cur = next;
    out[m] = scale.apply(cur);
  }
}

void laguerre_normalized(int k, double x, std::span<double> out) {
  if (k < 0) throw std::invalid_argument("laguerre_normalized: k must be non-negative");
  if (x < 0.0) throw std::invalid_argument("laguerre_normalized: x must be non-negative");
  if (out.empty()) return;
  if (x == 0.0) {
    // x^{k/2} kills every k > 0 term; for k = 0, L_n(0) = 1.
    for (auto& v : out) v = k == 0 ? 1.0 : 0.0;
    return;
  }
  const double dk = k;
  ScaledValue scale(0.5 * dk * std::log(x) - 0.5 * x - 0.5 * std::lgamma(dk + 1.0));
  double prev = 1.0;
  out[0] = scale.apply(prev);
  if (out.size() == 1) return;
  double cur = (1.0 + dk - x) / std::sqrt(1.0 + dk);
  out[1] = scale.apply(cur);
  for (std::size_t m = 2; m < out.size(); ++m) {
    const double dm = static_cast<double>(m);
    double next = ((2.0 * dm - 1.0 + dk - x) * cur - std::sqrt((dm - 1.0) * (dm - 1.0 + dk)) * prev) /
                  std::sqrt(dm * (dm + dk));
    if (std::abs(next) > kRescaleAbove) {
      next /= kRescaleAbove;
      cur /= kRescaleAbove;
      scale.shift(kLogRescale);
    }
    prev = cur;
    cur = next;
    out[m] = scale.apply(cur);
  }
}

}  // namespace thermoqubit
