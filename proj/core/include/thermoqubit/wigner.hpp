#pragma once

// Phase-space Wigner function on a rectangular (q, p) grid.
//
// Units ħ = ω = m = 1 with oscillator length b (default 1); the dimensionless
// coordinates are Q = q/b, P = b·p and α = (Q + iP)/√2. Normalization is
// ∫ W dq dp = tr ρ. The published closed form omits the 1/(2π) prefactor, so
// it is multiplied by kClosedFormScale before comparison.

#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "thermoqubit/fock.hpp"
#include "thermoqubit/thermal.hpp"

namespace thermoqubit {

inline constexpr double kClosedFormScale = 1.0 / (2.0 * std::numbers::pi);

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double q_min = -8.0;
  double q_max = 8.0;
  int nq = 257;
  double p_min = -8.0;
  double p_max = 8.0;
  int np = 257;
  double length_scale = 1.0;  // b

  double q_at(int i) const;
  double p_at(int j) const;
  double cell_area() const;
  void validate() const;
  /// Same resolution, bounds scaled by `factor` about the origin.
  GridSpec widened(double factor) const;
};

struct WignerGrid {
  double q_min = 0.0;
  double q_max = 0.0;
  double p_min = 0.0;
  double p_max = 0.0;
  int nq = 0;
  int np = 0;
  double length_scale = 1.0;
  Eigen::MatrixXd values;  // values(i, j) = W(q_i, p_j)
  double cell_area = 0.0;
  std::string normalization_convention = "integral_w_dq_dp_equals_trace_rho";

  GridSpec spec() const;
};

/// Σ W · cell_area.
double wigner_integral(const WignerGrid& grid);

/// Σ max(0, −W) · cell_area.
double wigner_negativity(const WignerGrid& grid);

/// W(q, p) = Σ_{m,n} ρ_{mn} K_{nm}(q, p) with the Laguerre-function kernel.
/// Only diagonals of ρ with a nonzero entry are visited. Throws GridError if
/// the imaginary residue of a cell exceeds 1e-10 (non-Hermitian input).
WignerGrid wigner_from_density(const FockMatrix& rho, const GridSpec& spec,
                               unsigned threads = 0);

/// wigner_from_density, doubling the bounds until the integral is within
/// grid_tol of tr ρ; gives up (GridError) beyond ±32.
WignerGrid wigner_normalized(const FockMatrix& rho, const GridSpec& spec, double grid_tol = 1e-6,
                             unsigned threads = 0);

struct WignerComparison {
  WignerGrid closed_form;  // published series, rescaled by kClosedFormScale
  WignerGrid numeric;      // wigner_from_density of the expansion density
  int cutoff = 0;
  double max_abs_discrepancy = 0.0;
  double integrated_abs_discrepancy = 0.0;  // Σ |ΔW| · cell_area
  double closed_form_integral = 0.0;
  double numeric_integral = 0.0;
};

/// Published closed-form series truncated at the cutoff, on the given grid,
/// next to the numeric Wigner function of the same state. Amplitudes must be
/// real (the series uses unconjugated products).
WignerComparison wigner_closed_form(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                    const GridSpec& spec, int cutoff = kAutoCutoff,
                                    double tail_tol = kDefaultTailTol, unsigned threads = 0);

/// The published series alone on a grid, rescaled by kClosedFormScale, at a
/// fixed cutoff. Amplitudes must be real.
WignerGrid wigner_closed_form_grid(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                   const GridSpec& spec, int cutoff, unsigned threads = 0);

/// Published series at one phase-space point, before rescaling.
double wigner_closed_form_point(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                double q, double p, int cutoff, double length_scale = 1.0);

}  // namespace thermoqubit
