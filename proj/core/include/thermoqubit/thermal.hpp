#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace thermoqubit {

/// Default bound on the thermal weight discarded by Fock truncation.
inline constexpr double kDefaultTailTol = 1e-10;

/// Largest cutoff the auto-selection will go to.
inline constexpr int kMaxCutoff = 512;

/// Pass as a cutoff to request automatic selection from the tail tolerance.
inline constexpr int kAutoCutoff = -1;

/// The requested (or auto-selected) cutoff leaves more than tail_tol of the
/// state's weight above the truncation.
class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Temperature scalars of a single mode. Holds β·ω, the mean thermal
/// occupation n̄ = 1/(e^{βω} − 1) and the Bogoliubov angle θ with
/// u = cosh θ = √(1+n̄), v = sinh θ = √n̄.
struct ThermalParams {
  double beta_omega;  // +inf at zero temperature
  double n_bar;
  double u;
  double v;
  double theta;

  static ThermalParams from_beta_omega(double beta_omega);
  static ThermalParams from_n_bar(double n_bar);

  /// Ground-state weight 1/(1+n̄) of the thermal distribution.
  double k() const { return 1.0 / (1.0 + n_bar); }
  /// Geometric ratio n̄/(1+n̄) = tanh²θ.
  double k1() const { return n_bar / (1.0 + n_bar); }
};

/// n̄ = 1/(e^{βω} − 1). Throws std::invalid_argument unless beta_omega > 0.
double mean_occupation(double beta_omega);

/// Inverse of mean_occupation: βω = ln(1 + 1/n̄), +inf at n̄ = 0.
double beta_omega_for(double n_bar);

/// u, v, θ for a given n̄ >= 0.
ThermalParams bogoliubov_factors(double n_bar);

/// Amplitudes (x, y, z, w) on the Fock states |0>, |1>, |2>, |4>.
struct PhysicalAmplitudes {
  std::complex<double> x;
  std::complex<double> y;
  std::complex<double> z;
  std::complex<double> w;

  static constexpr std::array<int, 4> kFockLevels = {0, 1, 2, 4};

  std::array<std::complex<double>, 4> as_array() const { return {x, y, z, w}; }
  double norm_squared() const;
  bool is_normalized(double tol = 1e-12) const;
  PhysicalAmplitudes normalized() const;
  bool is_real(double tol = 0.0) const;

  /// x = 0.2, y = 0.3, z = 0.6, w = √0.51.
  static PhysicalAmplitudes reference();
};

/// Weight of the thermal vacuum above `cutoff`: k1^{cutoff+1}.
double vacuum_tail_mass(const ThermalParams& params, int cutoff);

/// Weight of the thermalized state built from `amps` above `cutoff`. Exact:
/// the diagonal of that state is a |c|²-weighted mixture of the
/// photon-added thermal distributions for 0, 1, 2 and 4 added quanta.
double state_tail_mass(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff);

/// Σ_{n > cutoff} n^power P(n) over the same distribution; power 0 gives
/// state_tail_mass.
double state_tail_moment(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff,
                         int power);

/// |Q_truncated − Q| when <N> and <N²> lose their tails above `cutoff`.
/// Zero when the state has no photons.
double mandel_truncation_error(const PhysicalAmplitudes& amps, const ThermalParams& params,
                               int cutoff);

/// Smallest cutoff N >= 1 with k1^{N+1} < tail_tol·(1 − k1).
int auto_cutoff_vacuum(const ThermalParams& params, double tail_tol = kDefaultTailTol);

/// Smallest cutoff N >= 4 with state_tail_mass < tail_tol.
int auto_cutoff_state(const PhysicalAmplitudes& amps, const ThermalParams& params,
                      double tail_tol = kDefaultTailTol);

/// Smallest cutoff at or above auto_cutoff_state whose Mandel truncation
/// error is below tail_tol. Moments weight the tail by n and n², so the
/// mass criterion alone leaves errors of order cutoff² · tail_tol.
int auto_cutoff_mandel(const PhysicalAmplitudes& amps, const ThermalParams& params,
                       double tail_tol = kDefaultTailTol);

/// Resolves kAutoCutoff and checks an explicit cutoff against the vacuum tail.
int resolve_vacuum_cutoff(const ThermalParams& params, int cutoff, double tail_tol);

/// Resolves kAutoCutoff and checks an explicit cutoff against the state tail.
int resolve_state_cutoff(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff,
                         double tail_tol);

/// kAutoCutoff goes through auto_cutoff_mandel; an explicit cutoff is checked
/// like resolve_state_cutoff.
int resolve_mandel_cutoff(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff,
                          double tail_tol);

}  // namespace thermoqubit
