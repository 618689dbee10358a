#include <cmath>

#include "thermoqubit/observables.hpp"
#include "thermoqubit/tfd.hpp"

namespace thermoqubit {

double fidelity_numeric(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff,
                        double tail_tol) {
  const FockMatrix rho = thermal_state_density_expansion(amps, params, cutoff, tail_tol);
  const FockVector psi = physical_state(amps, rho.cutoff());
  const double overlap = psi.data().dot(rho.data() * psi.data()).real();
  return std::sqrt(std::max(0.0, overlap));
}

double fidelity_closed_form_value(const PhysicalAmplitudes& amps, const ThermalParams& params) {
  const auto [x, y, z, w] = amps.as_array();
  const double u = params.u;
  const double k = params.k();
  const double k1 = params.k1();
  const double x2 = std::norm(x);
  const double y2 = std::norm(y);
  const double z2 = std::norm(z);
  const double w2 = std::norm(w);
  const double r2 = std::sqrt(2.0);
  const double r6 = std::sqrt(6.0);
  const double r24 = std::sqrt(24.0);
  // std::pow(0.0, 0) == 1, which keeps the k1^0 terms alive at n̄ = 0.
  auto kk = [&](int m) { return k * std::pow(k1, m); };

  // Term list in printed order.
  Complex sum = 0.0;
  sum += x2 * x2 * kk(0);
  sum += x2 * y2 / u * kk(0);
  sum += x2 * z2 / (r2 * u * u) * kk(0);
  sum += x2 * w2 / (r24 * std::pow(u, 4)) * kk(0);
  sum += x2 * y2 / u * kk(0);
  sum += x2 * x2 * y2 / (u * u) * kk(1);
  sum += y2 * y2 / (u * u) * kk(0);
  sum += r2 * y2 * x * z / u * kk(1);
  sum += y2 * z2 / std::pow(u, 3) * kk(0);
  sum += r24 * y2 * w2 / (r24 * std::pow(u, 5)) * kk(0);
  sum += r2 * x2 * z2 / (u * u) * kk(0);
  sum += r2 * std::conj(x) * std::conj(z) * y * y / u * kk(1);
  sum += y2 * z2 / std::pow(u, 3) * kk(0);
  sum += x2 * z2 * kk(2);
  sum += 2.0 * y2 * z2 / (u * u) * kk(1);
  sum += z2 * z2 / std::pow(u, 4) * kk(2);
  sum += r6 * x * w * z2 / (u * u) * kk(2);
  sum += r6 * z2 * w2 / (r24 * std::pow(u, 6)) * kk(0);
  sum += r24 * x * std::conj(w) / (r24 * std::pow(u, 4)) * kk(0);
  sum += r24 * z2 * w2 / (r24 * std::pow(u, 5)) * kk(0);
  sum += r6 * x * x * z * z * std::conj(w) / std::pow(u, 4) * kk(2);
  sum += 2.0 * r6 * z2 * w2 / (r24 * std::pow(u, 4)) * kk(0);
  sum += x2 * w2 * kk(4);
  sum += 4.0 * y2 * w2 / (u * u) * kk(3);
  sum += z2 * w2 / (2.0 * std::pow(u, 4)) * kk(2);
  sum += 24.0 * w2 * w2 / (24.0 * std::pow(u, 8)) * kk(0);

  const double s = sum.real();
  return s >= 0.0 ? std::sqrt(s) : -std::sqrt(-s);
}

ObservableReport fidelity_closed_form(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                      int cutoff, double tail_tol) {
  ObservableReport report;
  report.amps = amps;
  report.n_bar = params.n_bar;
  report.tail_tol = tail_tol;
  report.cutoff = resolve_state_cutoff(amps, params, cutoff, tail_tol);
  report.value_numeric = fidelity_numeric(amps, params, report.cutoff, tail_tol);
  report.value_closed_form = fidelity_closed_form_value(amps, params);
  report.abs_discrepancy = std::abs(report.value_numeric - *report.value_closed_form);
  return report;
}

}  // namespace thermoqubit
