#pragma once

// Thermofield construction of a thermalized single-mode state.
//
// The thermal vacuum |0(β)> = U(β)|0, 0~> is obtained from the two-mode
// squeezing unitary U(β) = exp(θ (a† ã† − a ã)). The real generator makes
// U(β)|0, 0~> = sech θ Σ tanh^n θ |n, n~> with non-negative coefficients, so
// its reduction is the geometric density k Σ k1^n |n><n|.
//
// A pure state x|0> + y|1> + z|2> + w|4> is thermalized by replacing |n> with
// the thermal number state |n(β)> = (a†)^n |0(β)> / (√n! u^n). Its
// single-mode density can be built three ways: the explicit family-by-family
// series, the operator sandwich f ρ_β f† and the partial trace of the doubled
// state. The three are independent enough to serve as oracles for each other.

#include <array>

#include "thermoqubit/fock.hpp"
#include "thermoqubit/thermal.hpp"

namespace thermoqubit {

/// Diagonal k·k1^n, n = 0..cutoff.
FockMatrix thermal_vacuum_density(const ThermalParams& params, int cutoff = kAutoCutoff,
                                  double tail_tol = kDefaultTailTol);

/// Thermalized density written out as its sixteen |n+r><n+c| families,
/// r, c ∈ {0, 1, 2, 4}; terms with a ket or bra above the cutoff are dropped.
FockMatrix thermal_state_density_expansion(const PhysicalAmplitudes& amps,
                                           const ThermalParams& params,
                                           int cutoff = kAutoCutoff,
                                           double tail_tol = kDefaultTailTol);

/// f ρ_β f† with f = x + y a†/u + z (a†)²/(√2 u²) + w (a†)⁴/(√4! u⁴),
/// assembled at cutoff + 4 and cropped.
FockMatrix thermal_state_density_operator(const PhysicalAmplitudes& amps,
                                          const ThermalParams& params,
                                          int cutoff = kAutoCutoff,
                                          double tail_tol = kDefaultTailTol);

/// Generator θ (a† ã† − a ã) of the Bogoliubov transformation.
FockMatrix bogoliubov_generator(const ThermalParams& params, int cutoff);

/// Dense two-mode U(β). Exponentiated sector by sector: the generator
/// conserves n − ñ, so each sector is a tridiagonal block. Cutoff at most 64.
FockMatrix bogoliubov_unitary(const ThermalParams& params, int cutoff = kAutoCutoff,
                              double tail_tol = kDefaultTailTol);

/// U(β)|0, 0~> from the n = ñ sector alone; usable up to kMaxCutoff.
FockVector thermal_vacuum_state(const ThermalParams& params, int cutoff = kAutoCutoff,
                                double tail_tol = kDefaultTailTol);

/// |0(β)>, |1(β)>, |2(β)>, |4(β)> in the doubled space.
std::array<FockVector, 4> thermal_number_states(const ThermalParams& params,
                                                int cutoff = kAutoCutoff,
                                                double tail_tol = kDefaultTailTol);

/// x|0(β)> + y|1(β)> + z|2(β)> + w|4(β)>. The cutoff is checked against the
/// state tail rather than the vacuum tail.
FockVector thermal_state_vector(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                int cutoff = kAutoCutoff, double tail_tol = kDefaultTailTol);

/// x|0> + y|1> + z|2> + w|4> as a single-mode vector (cutoff >= 4).
FockVector physical_state(const PhysicalAmplitudes& amps, int cutoff);

/// ‖U_L(β)|ψ'(β)> − U(β)|ψ, 0~>‖ with U_L(β) = U(β)(U_L ⊗ I)U†(β),
/// |ψ'(β)> = U(β)|ψ', 0~> and ψ = U_L ψ'. The cutoff is the gate's.
/// Throws std::invalid_argument if the gate is not unitary within 1e-10.
double gate_thermalization_residual(const FockMatrix& gate, const PhysicalAmplitudes& amps_in,
                                    const ThermalParams& params,
                                    double tail_tol = kDefaultTailTol);

}  // namespace thermoqubit
