#include <cmath>

#include "thermoqubit/observables.hpp"
#include "thermoqubit/tfd.hpp"

namespace thermoqubit {

NumberMoments number_moments(const FockMatrix& rho) {
  if (rho.mode_count() != 1) throw ShapeError("number_moments: single-mode density required");
  const FockMatrix n_op = number_operator(rho.cutoff());
  // ρ is contracted against the diagonal of N̂ and N̂²; the sums run in index
  // order.
  double mean = 0.0;
  double mean_square = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    const double p = rho(i, i).real();
    const double n = n_op(i, i).real();
    mean += p * n;
    mean_square += p * n * n;
  }
  return {mean, mean_square};
}

double mandel_q(const NumberMoments& m) {
  if (!(m.mean > 0.0)) {
    throw UndefinedMandelError("Mandel Q undefined: mean occupation is zero");
  }
  return (m.mean_square - m.mean * m.mean - m.mean) / m.mean;
}

double mandel_numeric(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff,
                      double tail_tol) {
  const int n_max = resolve_mandel_cutoff(amps, params, cutoff, tail_tol);
  return mandel_q(number_moments(thermal_state_density_expansion(amps, params, n_max, tail_tol)));
}

MandelCoefficients mandel_coefficients(const PhysicalAmplitudes& amps) {
  const double x = std::norm(amps.x);
  const double y = std::norm(amps.y);
  const double z = std::norm(amps.z);
  const double w = std::norm(amps.w);
  MandelCoefficients c{};
  c.c1 = x + y + z + w;
  c.c2 = y + 2 * z + 4 * w;
  c.c3 = x * x + 2 * x * y + 2 * x * z + 2 * x * w + y * y + 2 * y * z + 2 * y * w + z * z +
         2 * z * w + w * w;
  c.c4 = x * y + y * y + 3 * y * z + 5 * y * w + 2 * x * z + 2 * z * z + 6 * z * w + 4 * x * w +
         4 * w * w;
  c.c5 = y * y + 4 * y * z + 8 * y * w + 4 * z * z + 16 * z * w + 16 * w * w;
  c.c6 = x + y + 4 * y + 7 * z + 8 * w;
  c.c7 = x + y + w + z;
  c.c8 = y + 4 * z + 16 * w;
  return c;
}

double mandel_closed_form_value(const PhysicalAmplitudes& amps, const ThermalParams& params) {
  const auto c = mandel_coefficients(amps);
  const double u2 = params.u * params.u;
  const double v2 = params.v * params.v;
  const double denom = c.c1 * v2 + c.c2 * u2;
  if (denom == 0.0) {
    throw UndefinedMandelError("Mandel Q closed form undefined: c1 v^2 + c2 u^2 = 0");
  }
  const double numer = (c.c6 - c.c4) * u2 * v2 + (c.c7 - c.c3) * v2 * v2 +
                       (c.c8 - c.c5) * u2 * u2 - c.c1 * v2 - c.c2 * u2;
  return numer / denom;
}

NumberMoments number_moments_closed_form(const PhysicalAmplitudes& amps,
                                         const ThermalParams& params) {
  const double x = std::norm(amps.x);
  const double y = std::norm(amps.y);
  const double z = std::norm(amps.z);
  const double w = std::norm(amps.w);
  const double u2 = params.u * params.u;
  const double v2 = params.v * params.v;
  const double mean = x * v2 + y * (u2 + v2) + z * (2 * u2 + v2) + w * (4 * u2 + v2);
  const double mean_square = (x + y + 4 * y + 7 * z + 8 * w) * u2 * v2 +
                             (x + w + y + z) * v2 * v2 + (y + 4 * z + 16 * w) * u2 * u2;
  return {mean, mean_square};
}

ObservableReport mandel_closed_form(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                    int cutoff, double tail_tol) {
  ObservableReport report;
  report.amps = amps;
  report.n_bar = params.n_bar;
  report.tail_tol = tail_tol;
  report.cutoff = resolve_mandel_cutoff(amps, params, cutoff, tail_tol);

  const FockMatrix rho = thermal_state_density_expansion(amps, params, report.cutoff, tail_tol);
  const NumberMoments numeric = number_moments(rho);
  const NumberMoments printed = number_moments_closed_form(amps, params);
  report.details = {{"mean_n_numeric", numeric.mean},
                    {"mean_n_closed_form", printed.mean},
                    {"mean_n2_numeric", numeric.mean_square},
                    {"mean_n2_closed_form", printed.mean_square}};

  report.value_numeric = mandel_q(numeric);
  report.value_closed_form = mandel_closed_form_value(amps, params);
  report.abs_discrepancy = std::abs(report.value_numeric - *report.value_closed_form);
  return report;
}

}  // namespace thermoqubit
