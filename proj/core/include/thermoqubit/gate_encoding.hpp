#pragma once

// Two logical qubits in one bosonic mode:
//
//   |00>_L -> |0>,  |01>_L -> |2>,  |10>_L -> (|4> + |1>)/√2,
//   |11>_L -> (|4> − |1>)/√2.
//
// Free evolution under H = ω a†a for half a period multiplies |n> by (−1)^n,
// which flips the sign of |1> only and so swaps the images of |10>_L and
// |11>_L: a CNOT.

#include <complex>

#include "thermoqubit/fock.hpp"
#include "thermoqubit/thermal.hpp"

namespace thermoqubit {

struct LogicalState {
  std::complex<double> xp;  // |00>_L
  std::complex<double> yp;  // |01>_L
  std::complex<double> zp;  // |10>_L
  std::complex<double> wp;  // |11>_L

  double norm_squared() const;
  bool is_normalized(double tol = 1e-12) const;
};

LogicalState cnot_logical(const LogicalState& s);

PhysicalAmplitudes encode(const LogicalState& s);

LogicalState decode(const PhysicalAmplitudes& p);

/// (x, y, z, w) -> (x, −y, z, w).
PhysicalAmplitudes evolve_half_period(const PhysicalAmplitudes& p);

/// diag((−1)^n), the t = π/ω propagator of ω a†a. Requires cutoff >= 4.
FockMatrix half_period_gate_matrix(int cutoff);

}  // namespace thermoqubit
