#include "thermoqubit/wigner.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "thermoqubit/laguerre.hpp"
#include "thermoqubit/parallel.hpp"
#include "thermoqubit/tfd.hpp"

namespace thermoqubit {

namespace {

constexpr double kMaxHalfWidth = 32.0;
constexpr double kImagResidueTol = 1e-10;

WignerGrid empty_grid(const GridSpec& spec) {
  WignerGrid g;
  g.q_min = spec.q_min;
  g.q_max = spec.q_max;
  g.p_min = spec.p_min;
  g.p_max = spec.p_max;
  g.nq = spec.nq;
  g.np = spec.np;
  g.length_scale = spec.length_scale;
  g.cell_area = spec.cell_area();
  g.values = Eigen::MatrixXd::Zero(spec.nq, spec.np);
  return g;
}

}  // namespace

double GridSpec::q_at(int i) const { return q_min + i * (q_max - q_min) / (nq - 1); }

double GridSpec::p_at(int j) const { return p_min + j * (p_max - p_min) / (np - 1); }

double GridSpec::cell_area() const {
  return (q_max - q_min) / (nq - 1) * ((p_max - p_min) / (np - 1));
}

void GridSpec::validate() const {
  if (nq < 2 || np < 2) throw GridError("grid needs at least two points per axis");
  if (!(q_max > q_min) || !(p_max > p_min)) throw GridError("grid bounds must be increasing");
  if (!(length_scale > 0.0)) throw GridError("length scale must be positive");
}

GridSpec GridSpec::widened(double factor) const {
  GridSpec g = *this;
  g.q_min *= factor;
  g.q_max *= factor;
  g.p_min *= factor;
  g.p_max *= factor;
  return g;
}

GridSpec WignerGrid::spec() const { return {q_min, q_max, nq, p_min, p_max, np, length_scale}; }

double wigner_integral(const WignerGrid& grid) { return grid.values.sum() * grid.cell_area; }

double wigner_negativity(const WignerGrid& grid) {
  return (-grid.values.array()).max(0.0).sum() * grid.cell_area;
}

WignerGrid wigner_from_density(const FockMatrix& rho, const GridSpec& spec, unsigned threads) {
  if (rho.mode_count() != 1) throw ShapeError("wigner_from_density: single-mode density required");
  spec.validate();
  const int dim = static_cast<int>(rho.dim());
  const Matrix& r = rho.data();

  std::vector<int> diagonals;
  for (int d = 0; d < dim; ++d) {
    for (int n = 0; n + d < dim; ++n) {
      if (r(n + d, n) != Complex(0.0) || r(n, n + d) != Complex(0.0)) {
        diagonals.push_back(d);
        break;
      }
    }
  }

  WignerGrid grid = empty_grid(spec);
  const double b = spec.length_scale;
  parallel_for(static_cast<std::size_t>(spec.nq), threads, [&](std::size_t row) {
    const int i = static_cast<int>(row);
    std::vector<double> ell(static_cast<std::size_t>(dim));
    const double q_dimless = spec.q_at(i) / b;
    for (int j = 0; j < spec.np; ++j) {
      const double p_dimless = spec.p_at(j) * b;
      const double radius2 = 0.5 * (q_dimless * q_dimless + p_dimless * p_dimless);  // |α|²
      const double phase = std::atan2(p_dimless, q_dimless);                        // arg α
      const double arg = 4.0 * radius2;
      Complex acc = 0.0;
      for (const int d : diagonals) {
        const std::span<double> ell_d(ell.data(), static_cast<std::size_t>(dim - d));
        laguerre_normalized(d, arg, ell_d);
        // K_{n,n+d} = (1/π)(−1)^n e^{−i d φ} ℓ_n^d; K_{n+d,n} is its conjugate.
        const Complex rot = std::polar(1.0, -d * phase);
        for (int n = 0; n + d < dim; ++n) {
          const double kernel = (n % 2 == 0 ? 1.0 : -1.0) * ell_d[static_cast<std::size_t>(n)];
          acc += r(n + d, n) * rot * kernel;
          if (d > 0) acc += r(n, n + d) * std::conj(rot) * kernel;
        }
      }
      acc /= std::numbers::pi;
      if (std::abs(acc.imag()) > kImagResidueTol) {
        throw GridError("Wigner value has imaginary residue " + std::to_string(acc.imag()) +
                        "; density is not Hermitian");
      }
      grid.values(i, j) = acc.real();
    }
  });
  return grid;
}

WignerGrid wigner_normalized(const FockMatrix& rho, const GridSpec& spec, double grid_tol,
                             unsigned threads) {
  const double target = rho.trace().real();
  GridSpec current = spec;
  while (true) {
    WignerGrid grid = wigner_from_density(rho, current, threads);
    const double total = wigner_integral(grid);
    if (std::abs(total - target) <= grid_tol) return grid;
    const double half_width = std::max({std::abs(current.q_min), std::abs(current.q_max),
                                        std::abs(current.p_min), std::abs(current.p_max)});
    if (2.0 * half_width > kMaxHalfWidth + 1e-12) {
      throw GridError("Wigner normalization not reached within +/-" +
                      std::to_string(kMaxHalfWidth) + " (integral " + std::to_string(total) +
                      ", trace " + std::to_string(target) + ")");
    }
    current = current.widened(2.0);
  }
}

double wigner_closed_form_point(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                double q, double p, int cutoff, double length_scale) {
  const double x = amps.x.real();
  const double y = amps.y.real();
  const double z = amps.z.real();
  const double w = amps.w.real();
  const double u = params.u;
  const double k = params.k();
  const double k1 = params.k1();
  const double qq = q / length_scale;
  const double pp = p * length_scale;
  const double radius = qq * qq + pp * pp;

  // lag[k][n] = e^{−R} L_n^k(2R)
  const auto len = static_cast<std::size_t>(cutoff + 5);
  std::array<std::vector<double>, 5> lag;
  for (int order = 0; order < 5; ++order) {
    lag[order].resize(len);
    laguerre_weighted(order, 2.0 * radius, -radius, lag[order]);
  }

  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r6 = std::sqrt(6.0);
  const double q2mp2 = qq * qq - pp * pp;
  const double quartic = qq * qq + pp * pp - 6.0 * qq * qq * pp * pp;
  const double cubic = qq * qq * qq - 3.0 * qq * pp * pp;

  double sum = 0.0;
  double weight = 1.0;  // k1^n, 0^0 = 1
  for (int n = 0; n <= cutoff; ++n) {
    const double dn = n;
    const auto m = static_cast<std::size_t>(n);
    double t = 2.0 * x * x * lag[0][m];
    t -= 2.0 * y * y / u * (dn + 1) * lag[0][m + 1];
    t += z * z * (dn + 1) * (dn + 2) / std::pow(u, 4) * lag[0][m + 2];
    t += 2.0 * w * w * (dn + 1) * (dn + 2) * (dn + 3) * (dn + 4) / (24.0 * std::pow(u, 8)) *
         lag[0][m + 4];
    t += 4.0 * r2 * x * y / u * qq * lag[1][m];
    t += 4.0 * r2 * x * z / (u * u) * q2mp2 * lag[2][m];
    t += 4.0 * r6 * x * w / (3.0 * std::pow(u, 4)) * quartic * lag[4][m];
    t -= 4.0 * (dn + 1) * y * z / std::pow(u, 3) * qq * lag[1][m + 1];
    t += 4.0 * r3 * (dn + 1) * y * w / (3.0 * std::pow(u, 5)) * cubic * lag[3][m + 1];
    t += 2.0 * r3 * (dn + 1) * (dn + 2) * w * z / (3.0 * std::pow(u, 6)) * q2mp2 * lag[2][m + 2];
    sum += (n % 2 == 0 ? weight : -weight) * t;
    weight *= k1;
  }
  return k * sum;
}

WignerGrid wigner_closed_form_grid(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                   const GridSpec& spec, int cutoff, unsigned threads) {
  if (!amps.is_real()) {
    throw std::invalid_argument("wigner_closed_form: amplitudes must be real");
  }
  spec.validate();
  WignerGrid grid = empty_grid(spec);
  parallel_for(static_cast<std::size_t>(spec.nq), threads, [&](std::size_t row) {
    const int i = static_cast<int>(row);
    for (int j = 0; j < spec.np; ++j) {
      grid.values(i, j) = kClosedFormScale * wigner_closed_form_point(amps, params, spec.q_at(i),
                                                                      spec.p_at(j), cutoff,
                                                                      spec.length_scale);
    }
  });
  return grid;
}

WignerComparison wigner_closed_form(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                    const GridSpec& spec, int cutoff, double tail_tol,
                                    unsigned threads) {
  WignerComparison out;
  out.cutoff = resolve_state_cutoff(amps, params, cutoff, tail_tol);
  out.closed_form = wigner_closed_form_grid(amps, params, spec, out.cutoff, threads);
  const FockMatrix rho = thermal_state_density_expansion(amps, params, out.cutoff, tail_tol);
  out.numeric = wigner_from_density(rho, spec, threads);
  const Eigen::MatrixXd diff = (out.closed_form.values - out.numeric.values).cwiseAbs();
  out.max_abs_discrepancy = diff.maxCoeff();
  out.integrated_abs_discrepancy = diff.sum() * out.numeric.cell_area;
  out.closed_form_integral = wigner_integral(out.closed_form);
  out.numeric_integral = wigner_integral(out.numeric);
  return out;
}

}  // namespace thermoqubit
