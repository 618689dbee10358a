// Scaling-and-squaring with diagonal Padé approximants of degree 3..13
// (Higham 2005 thresholds). The degree is picked from the 1-norm; for
// norms above theta_13 the input is scaled by 2^-s, exponentiated and
// squared back s times.

#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "thermoqubit/fock.hpp"

namespace thermoqubit {

namespace {

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                           30270240.0,    2162160.0,    110880.0,     3960.0,
                                           90.0,          1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const Matrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// Low-degree approximants: U = A * sum_odd(b_k A^{k-1}), V = sum_even(b_k A^k).
template <std::size_t N>
void pade_low(const Matrix& a, const std::array<double, N>& b, Matrix& u, Matrix& v) {
  const Eigen::Index d = a.rows();
  const Matrix ident = Matrix::Identity(d, d);
  const Matrix a2 = a * a;
  Matrix power = ident;
  Matrix odd = b[1] * ident;
  Matrix even = b[0] * ident;
  for (std::size_t k = 2; k + 1 < N + 1; k += 2) {
    power = power * a2;
    even += b[k] * power;
    if (k + 1 < N) odd += b[k + 1] * power;
  }
  u = a * odd;
  v = std::move(even);
}

void pade13(const Matrix& a, Matrix& u, Matrix& v) {
  const auto& b = kPade13;
  const Eigen::Index d = a.rows();
  const Matrix ident = Matrix::Identity(d, d);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  Matrix inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  Matrix tmp = a6 * inner;
  tmp += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
  u = a * tmp;
  inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * inner;
  v += b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

}  // namespace

Matrix matrix_exponential(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("matrix_exponential: matrix is not square");
  if (!m.allFinite()) throw std::invalid_argument("matrix_exponential: non-finite entries");
  const Eigen::Index d = m.rows();
  if (d == 0) return m;

  const double norm = one_norm(m);
  Matrix u;
  Matrix v;
  int squarings = 0;
  if (norm <= kTheta3) {
    pade_low(m, kPade3, u, v);
  } else if (norm <= kTheta5) {
    pade_low(m, kPade5, u, v);
  } else if (norm <= kTheta7) {
    pade_low(m, kPade7, u, v);
  } else if (norm <= kTheta9) {
    pade_low(m, kPade9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    const Matrix scaled = m * std::ldexp(1.0, -squarings);
    pade13(scaled, u, v);
  }

  // r = (V - U)^{-1} (V + U)
  Matrix result = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace thermoqubit
