#include "thermoqubit/thermal.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace thermoqubit {

namespace {

// Σ_{n > cutoff} n^power P(n) for N = m + J, J negative-binomial with
// P(J = j) = C(j+m, m) k^{m+1} k1^j. power 0 is the tail mass.
double photon_added_tail(int m, double k, double k1, int cutoff, int power = 0) {
  if (k1 == 0.0) return cutoff >= m ? 0.0 : std::pow(static_cast<double>(m), power);
  const int first = std::max(0, cutoff - m + 1);
  // log of the first term, then walk the ratio
  // t_{j+1}/t_j = k1 (j+m+1)/(j+1).
  double log_term = (m + 1) * std::log(k) + first * std::log(k1) + std::lgamma(first + m + 1.0) -
                    std::lgamma(m + 1.0) - std::lgamma(first + 1.0);
  double term = std::exp(log_term);
  double sum = 0.0;
  for (int j = first;; ++j) {
    const double n = j + m;
    const double contribution = term * std::pow(n, power);
    sum += contribution;
    const double ratio = k1 * (j + m + 1.0) / (j + 1.0);
    term *= ratio;
    const double growth = ratio * std::pow((n + 1.0) / std::max(n, 1.0), power);
    if (growth < 1.0 && contribution * growth <= sum * 1e-17) break;
  }
  return sum;
}

// Exact <N> and <N²> of the untruncated thermalized state.
std::array<double, 2> exact_moments(const PhysicalAmplitudes& amps, double n_bar) {
  const auto c = amps.as_array();
  double m1 = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double m = PhysicalAmplitudes::kFockLevels[i];
    const double r = m + 1.0;
    const double mean = m + r * n_bar;
    m1 += std::norm(c[i]) * mean;
    m2 += std::norm(c[i]) * (r * n_bar * (1.0 + n_bar) + mean * mean);
  }
  return {m1, m2};
}

double q_from(double m1, double m2) { return m2 / m1 - m1 - 1.0; }

}  // namespace

double mean_occupation(double beta_omega) {
  if (!(beta_omega > 0.0)) {
    throw std::invalid_argument("mean_occupation: beta_omega must be positive");
  }
  return 1.0 / std::expm1(beta_omega);
}

double beta_omega_for(double n_bar) {
  if (!(n_bar >= 0.0)) throw std::invalid_argument("beta_omega_for: n_bar must be non-negative");
  if (n_bar == 0.0) return std::numeric_limits<double>::infinity();
  return std::log1p(1.0 / n_bar);
}

ThermalParams bogoliubov_factors(double n_bar) {
  if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
    throw std::invalid_argument("bogoliubov_factors: n_bar must be finite and non-negative");
  }
  const double v = std::sqrt(n_bar);
  return ThermalParams{beta_omega_for(n_bar), n_bar, std::sqrt(1.0 + n_bar), v, std::asinh(v)};
}

ThermalParams ThermalParams::from_n_bar(double n_bar) { return bogoliubov_factors(n_bar); }

ThermalParams ThermalParams::from_beta_omega(double beta_omega) {
  ThermalParams p = bogoliubov_factors(mean_occupation(beta_omega));
  p.beta_omega = beta_omega;
  return p;
}

double PhysicalAmplitudes::norm_squared() const {
  return std::norm(x) + std::norm(y) + std::norm(z) + std::norm(w);
}

bool PhysicalAmplitudes::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

PhysicalAmplitudes PhysicalAmplitudes::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw std::invalid_argument("cannot normalize a zero amplitude vector");
  return {x / n, y / n, z / n, w / n};
}

bool PhysicalAmplitudes::is_real(double tol) const {
  return std::abs(x.imag()) <= tol && std::abs(y.imag()) <= tol && std::abs(z.imag()) <= tol &&
         std::abs(w.imag()) <= tol;
}

PhysicalAmplitudes PhysicalAmplitudes::reference() { return {0.2, 0.3, 0.6, std::sqrt(0.51)}; }

double vacuum_tail_mass(const ThermalParams& params, int cutoff) {
  return std::pow(params.k1(), cutoff + 1);
}

double state_tail_mass(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff) {
  const auto c = amps.as_array();
  const double k = params.k();
  const double k1 = params.k1();
  double tail = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double weight = std::norm(c[i]);
    if (weight == 0.0) continue;
    tail += weight * photon_added_tail(PhysicalAmplitudes::kFockLevels[i], k, k1, cutoff);
  }
  return tail;
}

double state_tail_moment(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff,
                         int power) {
  const auto c = amps.as_array();
  double tail = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double weight = std::norm(c[i]);
    if (weight == 0.0) continue;
    tail += weight * photon_added_tail(PhysicalAmplitudes::kFockLevels[i], params.k(),
                                       params.k1(), cutoff, power);
  }
  return tail;
}

double mandel_truncation_error(const PhysicalAmplitudes& amps, const ThermalParams& params,
                               int cutoff) {
  const auto [m1, m2] = exact_moments(amps, params.n_bar);
  if (!(m1 > 0.0)) return 0.0;
  const double t1 = state_tail_moment(amps, params, cutoff, 1);
  const double t2 = state_tail_moment(amps, params, cutoff, 2);
  if (!(m1 - t1 > 0.0)) return std::numeric_limits<double>::infinity();
  return std::abs(q_from(m1 - t1, m2 - t2) - q_from(m1, m2));
}

int auto_cutoff_vacuum(const ThermalParams& params, double tail_tol) {
  const double k1 = params.k1();
  for (int n = 1; n <= kMaxCutoff; ++n) {
    if (std::pow(k1, n + 1) < tail_tol * (1.0 - k1)) return n;
  }
  throw CutoffError("thermal vacuum at n_bar=" + std::to_string(params.n_bar) +
                    " needs a cutoff above " + std::to_string(kMaxCutoff));
}

int auto_cutoff_state(const PhysicalAmplitudes& amps, const ThermalParams& params,
                      double tail_tol) {
  for (int n = 4; n <= kMaxCutoff; ++n) {
    if (state_tail_mass(amps, params, n) < tail_tol) return n;
  }
  throw CutoffError("thermalized state at n_bar=" + std::to_string(params.n_bar) +
                    " needs a cutoff above " + std::to_string(kMaxCutoff));
}

int auto_cutoff_mandel(const PhysicalAmplitudes& amps, const ThermalParams& params,
                       double tail_tol) {
  for (int n = auto_cutoff_state(amps, params, tail_tol); n <= kMaxCutoff; ++n) {
    if (mandel_truncation_error(amps, params, n) < tail_tol) return n;
  }
  throw CutoffError("Mandel Q at n_bar=" + std::to_string(params.n_bar) +
                    " needs a cutoff above " + std::to_string(kMaxCutoff));
}

int resolve_vacuum_cutoff(const ThermalParams& params, int cutoff, double tail_tol) {
  if (cutoff == kAutoCutoff) return auto_cutoff_vacuum(params, tail_tol);
  if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
  const double tail = vacuum_tail_mass(params, cutoff);
  if (!(tail < tail_tol)) {
    throw CutoffError("cutoff " + std::to_string(cutoff) + " leaves thermal tail mass " +
                      std::to_string(tail) + " >= tail_tol");
  }
  return cutoff;
}

int resolve_state_cutoff(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff,
                         double tail_tol) {
  if (cutoff == kAutoCutoff) return auto_cutoff_state(amps, params, tail_tol);
  if (cutoff < 4) throw std::invalid_argument("cutoff must be at least 4 to hold |4>");
  const double tail = state_tail_mass(amps, params, cutoff);
  if (!(tail < tail_tol)) {
    throw CutoffError("cutoff " + std::to_string(cutoff) + " leaves state tail mass " +
                      std::to_string(tail) + " >= tail_tol");
  }
  return cutoff;
}

int resolve_mandel_cutoff(const PhysicalAmplitudes& amps, const ThermalParams& params, int cutoff,
                          double tail_tol) {
  if (cutoff == kAutoCutoff) return auto_cutoff_mandel(amps, params, tail_tol);
  return resolve_state_cutoff(amps, params, cutoff, tail_tol);
}

}  // namespace thermoqubit
