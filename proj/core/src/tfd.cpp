#include "thermoqubit/tfd.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace thermoqubit {

namespace {

constexpr int kDenseTwoModeCutoff = 64;

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt24 = std::sqrt(24.0);

// One |n+ket><n+bra| family of the expansion: amplitude prefactor and the
// n-dependent matrix-element weight.
struct Family {
  int ket;
  int bra;
  Complex coefficient;
  std::function<double(double)> weight;
};

// Tridiagonal block of θ(a†ã† − aã) on the sector n − ñ = shift, basis
// j -> |j + max(shift,0), j + max(-shift,0)>.
Matrix sector_generator(double theta, int cutoff, int shift) {
  const int offset = std::abs(shift);
  const Eigen::Index size = cutoff - offset + 1;
  Matrix g = Matrix::Zero(size, size);
  for (Eigen::Index j = 0; j + 1 < size; ++j) {
    const double amp = theta * std::sqrt(static_cast<double>((j + offset + 1) * (j + 1)));
    g(j + 1, j) = amp;
    g(j, j + 1) = -amp;
  }
  return g;
}

Eigen::Index sector_index(int cutoff, int shift, Eigen::Index j) {
  const Eigen::Index n = j + std::max(shift, 0);
  const Eigen::Index nt = j + std::max(-shift, 0);
  return nt * (cutoff + 1) + n;
}

void require_normalized(const PhysicalAmplitudes& amps) {
  if (!amps.is_normalized(1e-12)) {
    throw std::invalid_argument("amplitudes are not normalized");
  }
}

// (a† ⊗ I)^times on a two-mode vector, dropping anything above the cutoff.
Vector raise_original(const Vector& in, int cutoff, int times) {
  const Eigen::Index d = cutoff + 1;
  Vector cur = in;
  for (int t = 0; t < times; ++t) {
    Vector next = Vector::Zero(d * d);
    for (Eigen::Index nt = 0; nt < d; ++nt) {
      for (Eigen::Index n = 0; n + 1 < d; ++n) {
        next(nt * d + n + 1) = std::sqrt(static_cast<double>(n + 1)) * cur(nt * d + n);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

FockVector vacuum_in_sector(const ThermalParams& params, int n_max) {
  const Matrix block = matrix_exponential(sector_generator(params.theta, n_max, 0));
  const Eigen::Index d = n_max + 1;
  Vector v = Vector::Zero(d * d);
  for (Eigen::Index j = 0; j < d; ++j) v(j * d + j) = block(j, 0);
  return {std::move(v), n_max, 2};
}

std::array<FockVector, 4> number_states_at(const ThermalParams& params, int n_max) {
  const FockVector vacuum = vacuum_in_sector(params, n_max);
  std::array<FockVector, 4> out = {vacuum, vacuum, vacuum, vacuum};
  const auto& levels = PhysicalAmplitudes::kFockLevels;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int m = levels[i];
    const double norm = std::sqrt(std::tgamma(m + 1.0)) * std::pow(params.u, m);
    out[i] = FockVector(raise_original(vacuum.data(), n_max, m) / norm, n_max, 2);
  }
  return out;
}

}  // namespace

FockMatrix thermal_vacuum_density(const ThermalParams& params, int cutoff, double tail_tol) {
  const int n_max = resolve_vacuum_cutoff(params, cutoff, tail_tol);
  const double k = params.k();
  const double k1 = params.k1();
  Matrix rho = Matrix::Zero(n_max + 1, n_max + 1);
  double weight = k;
  for (int n = 0; n <= n_max; ++n) {
    rho(n, n) = weight;
    weight *= k1;
  }
  return {std::move(rho), n_max};
}

FockMatrix thermal_state_density_expansion(const PhysicalAmplitudes& amps,
                                           const ThermalParams& params, int cutoff,
                                           double tail_tol) {
  require_normalized(amps);
  const int n_max = resolve_state_cutoff(amps, params, cutoff, tail_tol);
  const auto [x, y, z, w] = amps.as_array();
  const double u = params.u;
  const double k = params.k();
  const double k1 = params.k1();

  auto s = [](double v) { return std::sqrt(v); };
  // Rows follow the printed order of the sixteen sums. The |n+4><n+1| family
  // carries conj(y)·w, the Hermitian partner of the conj(w)·y family.
  const std::array<Family, 16> families = {{
      {0, 0, std::norm(x) * k, [](double) { return 1.0; }},
      {1, 0, std::conj(x) * y * k / u, [&](double n) { return s(n + 1); }},
      {2, 0, std::conj(x) * z * k / (kSqrt2 * u * u),
       [&](double n) { return s((n + 1) * (n + 2)); }},
      {4, 0, std::conj(x) * w * k / (kSqrt24 * std::pow(u, 4)),
       [&](double n) { return s((n + 1) * (n + 2) * (n + 3) * (n + 4)); }},
      {0, 1, std::conj(y) * x * k / u, [&](double n) { return s(n + 1); }},
      {1, 1, std::norm(y) * k / (u * u), [](double n) { return n + 1; }},
      {2, 1, std::conj(y) * z * k / (kSqrt2 * std::pow(u, 3)),
       [&](double n) { return (n + 1) * s(n + 2); }},
      {4, 1, std::conj(y) * w * k / (kSqrt24 * std::pow(u, 5)),
       [&](double n) { return (n + 1) * s((n + 2) * (n + 3) * (n + 4)); }},
      {0, 2, std::conj(z) * x * k / (kSqrt2 * u * u),
       [&](double n) { return s((n + 1) * (n + 2)); }},
      {1, 2, std::conj(z) * y * k / (kSqrt2 * std::pow(u, 3)),
       [&](double n) { return (n + 1) * s(n + 2); }},
      {2, 2, std::norm(z) * k / (2.0 * std::pow(u, 4)),
       [](double n) { return (n + 1) * (n + 2); }},
      {4, 2, std::conj(z) * w * k / (kSqrt2 * kSqrt24 * std::pow(u, 6)),
       [&](double n) { return (n + 1) * (n + 2) * s((n + 3) * (n + 4)); }},
      {0, 4, std::conj(w) * x * k / (kSqrt24 * std::pow(u, 4)),
       [&](double n) { return s((n + 1) * (n + 2) * (n + 3) * (n + 4)); }},
      {1, 4, std::conj(w) * y * k / (kSqrt24 * std::pow(u, 5)),
       [&](double n) { return (n + 1) * s((n + 2) * (n + 3) * (n + 4)); }},
      {2, 4, std::conj(w) * z * k / (kSqrt24 * kSqrt2 * std::pow(u, 6)),
       [&](double n) { return (n + 1) * (n + 2) * s((n + 3) * (n + 4)); }},
      {4, 4, std::norm(w) * k / (24.0 * std::pow(u, 8)),
       [](double n) { return (n + 1) * (n + 2) * (n + 3) * (n + 4); }},
  }};

  Matrix rho = Matrix::Zero(n_max + 1, n_max + 1);
  for (const auto& f : families) {
    if (f.coefficient == Complex(0.0)) continue;
    const int last = n_max - std::max(f.ket, f.bra);
    for (int n = 0; n <= last; ++n) {
      const double dn = n;
      rho(n + f.ket, n + f.bra) += f.coefficient * std::pow(k1, n) * f.weight(dn);
    }
  }
  return {std::move(rho), n_max};
}

FockMatrix thermal_state_density_operator(const PhysicalAmplitudes& amps,
                                          const ThermalParams& params, int cutoff,
                                          double tail_tol) {
  require_normalized(amps);
  const int n_max = resolve_state_cutoff(amps, params, cutoff, tail_tol);
  const int wide = n_max + 4;
  const FockMatrix raise = build_ladder(wide).raising;
  const double u = params.u;

  const FockMatrix raise2 = raise * raise;
  const FockMatrix raise4 = raise2 * raise2;
  const FockMatrix f = amps.x * FockMatrix::identity(wide) + (amps.y / u) * raise +
                       (amps.z / (kSqrt2 * u * u)) * raise2 +
                       (amps.w / (kSqrt24 * std::pow(u, 4))) * raise4;

  // ρ_β at the widened cutoff; its tail above n_max is irrelevant after the
  // crop because f only raises occupation.
  Matrix rho_beta = Matrix::Zero(wide + 1, wide + 1);
  double weight = params.k();
  for (int n = 0; n <= wide; ++n) {
    rho_beta(n, n) = weight;
    weight *= params.k1();
  }
  const FockMatrix full = f * FockMatrix(std::move(rho_beta), wide) * f.adjoint();
  return crop(full, n_max);
}

FockMatrix bogoliubov_generator(const ThermalParams& params, int cutoff) {
  const auto [lower, raise] = build_ladder(cutoff);
  const FockMatrix create_pair = tensor_product(raise, raise);
  const FockMatrix annihilate_pair = tensor_product(lower, lower);
  return Complex(params.theta) * (create_pair - annihilate_pair);
}

FockMatrix bogoliubov_unitary(const ThermalParams& params, int cutoff, double tail_tol) {
  const int n_max = resolve_vacuum_cutoff(params, cutoff, tail_tol);
  if (n_max > kDenseTwoModeCutoff) {
    throw CutoffError("bogoliubov_unitary: dense two-mode matrices are limited to cutoff " +
                      std::to_string(kDenseTwoModeCutoff));
  }
  const Eigen::Index d = n_max + 1;
  Matrix out = Matrix::Zero(d * d, d * d);
  for (int shift = -n_max; shift <= n_max; ++shift) {
    const Matrix block = matrix_exponential(sector_generator(params.theta, n_max, shift));
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      for (Eigen::Index j = 0; j < block.cols(); ++j) {
        out(sector_index(n_max, shift, i), sector_index(n_max, shift, j)) = block(i, j);
      }
    }
  }
  return {std::move(out), n_max, 2};
}

FockVector thermal_vacuum_state(const ThermalParams& params, int cutoff, double tail_tol) {
  return vacuum_in_sector(params, resolve_vacuum_cutoff(params, cutoff, tail_tol));
}

std::array<FockVector, 4> thermal_number_states(const ThermalParams& params, int cutoff,
                                                double tail_tol) {
  return number_states_at(params, resolve_vacuum_cutoff(params, cutoff, tail_tol));
}

FockVector thermal_state_vector(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                int cutoff, double tail_tol) {
  require_normalized(amps);
  const int n_max = resolve_state_cutoff(amps, params, cutoff, tail_tol);
  const auto states = number_states_at(params, n_max);
  const auto c = amps.as_array();
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(states[0].dim()));
  for (std::size_t i = 0; i < c.size(); ++i) psi += c[i] * states[i].data();
  return {std::move(psi), n_max, 2};
}

FockVector physical_state(const PhysicalAmplitudes& amps, int cutoff) {
  if (cutoff < 4) throw std::invalid_argument("physical_state: cutoff must be at least 4");
  Vector v = Vector::Zero(cutoff + 1);
  const auto c = amps.as_array();
  for (std::size_t i = 0; i < c.size(); ++i) v(PhysicalAmplitudes::kFockLevels[i]) = c[i];
  return {std::move(v), cutoff};
}

double gate_thermalization_residual(const FockMatrix& gate, const PhysicalAmplitudes& amps_in,
                                    const ThermalParams& params, double tail_tol) {
  if (gate.mode_count() != 1) throw ShapeError("gate must act on a single mode");
  const Eigen::Index d = gate.cutoff() + 1;
  const double defect =
      (gate.data().adjoint() * gate.data() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw std::invalid_argument("gate_thermalization_residual: gate is not unitary");
  }
  require_normalized(amps_in);

  const int n_max = gate.cutoff();
  const FockMatrix u_beta = bogoliubov_unitary(params, n_max, tail_tol);
  const FockMatrix u_beta_dag = u_beta.adjoint();

  // |ψ', 0~> and |ψ, 0~>
  const FockVector single_in = physical_state(amps_in, n_max);
  Vector lifted_in = Vector::Zero(d * d);
  lifted_in.head(d) = single_in.data();
  const FockVector prime_vac(lifted_in, n_max, 2);
  const FockVector out_vac = apply(gate, prime_vac, Mode::original);

  const FockVector prime_beta = u_beta * prime_vac;
  const FockVector lhs = u_beta * apply(gate, u_beta_dag * prime_beta, Mode::original);
  const FockVector rhs = u_beta * out_vac;
  return (lhs.data() - rhs.data()).norm();
}

}  // namespace thermoqubit
