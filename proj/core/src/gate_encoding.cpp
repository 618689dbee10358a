#include "thermoqubit/gate_encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace thermoqubit {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

double LogicalState::norm_squared() const {
  return std::norm(xp) + std::norm(yp) + std::norm(zp) + std::norm(wp);
}

bool LogicalState::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

LogicalState cnot_logical(const LogicalState& s) { return {s.xp, s.yp, s.wp, s.zp}; }

PhysicalAmplitudes encode(const LogicalState& s) {
  return {s.xp, kInvSqrt2 * (s.zp - s.wp), s.yp, kInvSqrt2 * (s.zp + s.wp)};
}

LogicalState decode(const PhysicalAmplitudes& p) {
  return {p.x, p.z, kInvSqrt2 * (p.w + p.y), kInvSqrt2 * (p.w - p.y)};
}

PhysicalAmplitudes evolve_half_period(const PhysicalAmplitudes& p) { return {p.x, -p.y, p.z, p.w}; }

FockMatrix half_period_gate_matrix(int cutoff) {
  if (cutoff < 4) throw std::invalid_argument("half_period_gate_matrix: cutoff must be >= 4");
  Matrix g = Matrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) g(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return {std::move(g), cutoff};
}

}  // namespace thermoqubit
