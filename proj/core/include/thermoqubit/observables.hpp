#pragma once

// Fidelity and Mandel Q of the thermalized state. Each observable has a
// numeric route through the density matrix and a closed-form route that
// evaluates the published term lists as written; the report carries both and
// their difference. The numeric route is the reference.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thermoqubit/fock.hpp"
#include "thermoqubit/thermal.hpp"

namespace thermoqubit {

/// Mandel Q is undefined because the state has zero mean occupation.
class UndefinedMandelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ObservableReport {
  double value_numeric = 0.0;
  std::optional<double> value_closed_form;
  std::optional<double> abs_discrepancy;

  PhysicalAmplitudes amps{};
  double n_bar = 0.0;
  int cutoff = 0;
  double tail_tol = kDefaultTailTol;

  /// Auxiliary named quantities (intermediate moments and the like).
  std::vector<std::pair<std::string, double>> details;
};

/// √<Ψ|ρ|Ψ> with ρ from the family expansion.
double fidelity_numeric(const PhysicalAmplitudes& amps, const ThermalParams& params,
                        int cutoff = kAutoCutoff, double tail_tol = kDefaultTailTol);

/// Square root of the published 26-term fidelity sum (k1^{n=m} read as
/// k1^m, 0^0 = 1). A negative bracket yields −√|sum| so the value stays finite.
double fidelity_closed_form_value(const PhysicalAmplitudes& amps, const ThermalParams& params);

ObservableReport fidelity_closed_form(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                      int cutoff = kAutoCutoff,
                                      double tail_tol = kDefaultTailTol);

/// Photon-number moments of a single-mode density matrix.
struct NumberMoments {
  double mean;
  double mean_square;
};

NumberMoments number_moments(const FockMatrix& rho);

/// Q = (<N²> − <N>² − <N>)/<N>. Throws UndefinedMandelError when <N> = 0.
double mandel_q(const NumberMoments& m);

double mandel_numeric(const PhysicalAmplitudes& amps, const ThermalParams& params,
                      int cutoff = kAutoCutoff, double tail_tol = kDefaultTailTol);

struct MandelCoefficients {
  double c1, c2, c3, c4, c5, c6, c7, c8;
};

MandelCoefficients mandel_coefficients(const PhysicalAmplitudes& amps);

/// Q from the c1..c8 closed form. Throws UndefinedMandelError when
/// c1 v² + c2 u² = 0.
double mandel_closed_form_value(const PhysicalAmplitudes& amps, const ThermalParams& params);

/// <N> and <N²> exactly as the printed closed forms give them.
NumberMoments number_moments_closed_form(const PhysicalAmplitudes& amps,
                                         const ThermalParams& params);

ObservableReport mandel_closed_form(const PhysicalAmplitudes& amps, const ThermalParams& params,
                                    int cutoff = kAutoCutoff, double tail_tol = kDefaultTailTol);

}  // namespace thermoqubit
