#include "thermoqubit/fock.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace thermoqubit {

namespace {

void require_same_layout(const FockMatrix& a, const FockMatrix& b, const char* what) {
  if (a.cutoff() != b.cutoff() || a.mode_count() != b.mode_count()) {
    throw ShapeError(std::string(what) + ": operands have different Fock layouts");
  }
}

}  // namespace

std::size_t fock_dimension(int cutoff, int mode_count) {
  if (cutoff < 0) throw ShapeError("cutoff must be non-negative");
  if (mode_count != 1 && mode_count != 2) throw ShapeError("mode_count must be 1 or 2");
  const auto per_mode = static_cast<std::size_t>(cutoff) + 1;
  return mode_count == 1 ? per_mode : per_mode * per_mode;
}

FockMatrix::FockMatrix(Matrix data, int cutoff, int mode_count)
    : data_(std::move(data)), cutoff_(cutoff), mode_count_(mode_count) {
  const auto d = static_cast<Eigen::Index>(fock_dimension(cutoff, mode_count));
  if (data_.rows() != d || data_.cols() != d) {
    throw ShapeError("FockMatrix: data is " + std::to_string(data_.rows()) + "x" +
                     std::to_string(data_.cols()) + ", layout needs " + std::to_string(d));
  }
}

FockMatrix FockMatrix::zero(int cutoff, int mode_count) {
  const auto d = static_cast<Eigen::Index>(fock_dimension(cutoff, mode_count));
  return {Matrix::Zero(d, d), cutoff, mode_count};
}

FockMatrix FockMatrix::identity(int cutoff, int mode_count) {
  const auto d = static_cast<Eigen::Index>(fock_dimension(cutoff, mode_count));
  return {Matrix::Identity(d, d), cutoff, mode_count};
}

FockMatrix FockMatrix::adjoint() const { return {data_.adjoint(), cutoff_, mode_count_}; }

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
  require_same_layout(a, b, "product");
  return {a.data_ * b.data_, a.cutoff_, a.mode_count_};
}

FockMatrix operator+(const FockMatrix& a, const FockMatrix& b) {
  require_same_layout(a, b, "sum");
  return {a.data_ + b.data_, a.cutoff_, a.mode_count_};
}

FockMatrix operator-(const FockMatrix& a, const FockMatrix& b) {
  require_same_layout(a, b, "difference");
  return {a.data_ - b.data_, a.cutoff_, a.mode_count_};
}

FockMatrix operator*(Complex s, const FockMatrix& a) {
  return {s * a.data_, a.cutoff_, a.mode_count_};
}

FockVector::FockVector(Vector data, int cutoff, int mode_count)
    : data_(std::move(data)), cutoff_(cutoff), mode_count_(mode_count) {
  const auto d = static_cast<Eigen::Index>(fock_dimension(cutoff, mode_count));
  if (data_.size() != d) {
    throw ShapeError("FockVector: size " + std::to_string(data_.size()) + ", layout needs " +
                     std::to_string(d));
  }
}

FockVector FockVector::basis(int cutoff, int n, int n_tilde) {
  const int modes = n_tilde < 0 ? 1 : 2;
  if (n < 0 || n > cutoff || n_tilde > cutoff) throw ShapeError("basis index above cutoff");
  const auto d = static_cast<Eigen::Index>(fock_dimension(cutoff, modes));
  Vector v = Vector::Zero(d);
  const Eigen::Index idx = modes == 1 ? n : static_cast<Eigen::Index>(n_tilde) * (cutoff + 1) + n;
  v(idx) = 1.0;
  return {std::move(v), cutoff, modes};
}

FockVector operator*(const FockMatrix& m, const FockVector& v) {
  if (m.cutoff() != v.cutoff() || m.mode_count() != v.mode_count()) {
    throw ShapeError("matrix-vector product: different Fock layouts");
  }
  return {m.data() * v.data(), v.cutoff(), v.mode_count()};
}

Ladder build_ladder(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("build_ladder: cutoff must be at least 1");
  const Eigen::Index d = cutoff + 1;
  Matrix lower = Matrix::Zero(d, d);
  for (Eigen::Index n = 1; n < d; ++n) lower(n - 1, n) = std::sqrt(static_cast<double>(n));
  Matrix raise = lower.adjoint();
  return {FockMatrix(std::move(lower), cutoff), FockMatrix(std::move(raise), cutoff)};
}

FockMatrix number_operator(int cutoff) {
  const Eigen::Index d = static_cast<Eigen::Index>(fock_dimension(cutoff, 1));
  Matrix n = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) n(i, i) = static_cast<double>(i);
  return {std::move(n), cutoff};
}

FockMatrix tensor_product(const FockMatrix& original, const FockMatrix& tilde) {
  if (original.mode_count() != 1 || tilde.mode_count() != 1) {
    throw ShapeError("tensor_product: both factors must be single-mode");
  }
  if (original.cutoff() != tilde.cutoff()) {
    throw ShapeError("tensor_product: cutoff mismatch");
  }
  const Eigen::Index d = original.cutoff() + 1;
  const Matrix& a = original.data();
  const Matrix& b = tilde.data();
  Matrix out(d * d, d * d);
  // Row (nt, n), column (mt, m) -> b(nt, mt) * a(n, m).
  for (Eigen::Index nt = 0; nt < d; ++nt) {
    for (Eigen::Index mt = 0; mt < d; ++mt) {
      out.block(nt * d, mt * d, d, d) = b(nt, mt) * a;
    }
  }
  return {std::move(out), original.cutoff(), 2};
}

FockMatrix embed(const FockMatrix& single, Mode mode) {
  const auto id = FockMatrix::identity(single.cutoff());
  return mode == Mode::original ? tensor_product(single, id) : tensor_product(id, single);
}

FockMatrix matrix_exponential(const FockMatrix& m) {
  return {matrix_exponential(m.data()), m.cutoff(), m.mode_count()};
}

FockMatrix partial_trace(const FockMatrix& rho, Mode keep) {
  if (rho.mode_count() != 2) throw ShapeError("partial_trace: input must be two-mode");
  const Eigen::Index d = rho.cutoff() + 1;
  const Matrix& r = rho.data();
  Matrix out = Matrix::Zero(d, d);
  if (keep == Mode::original) {
    for (Eigen::Index t = 0; t < d; ++t) out += r.block(t * d, t * d, d, d);
  } else {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        Complex acc = 0.0;
        for (Eigen::Index n = 0; n < d; ++n) acc += r(i * d + n, j * d + n);
        out(i, j) = acc;
      }
    }
  }
  return {std::move(out), rho.cutoff()};
}

FockMatrix reduced_density(const FockVector& psi, Mode keep) {
  if (psi.mode_count() != 2) throw ShapeError("reduced_density: input must be two-mode");
  const Eigen::Index d = psi.cutoff() + 1;
  // Column t of `amp` holds the amplitudes psi(n, t); Eigen is column-major so
  // this is a view of the contiguous two-mode vector.
  Eigen::Map<const Matrix> amp(psi.data().data(), d, d);
  Matrix out = keep == Mode::original ? Matrix(amp * amp.adjoint())
                                      : Matrix((amp.adjoint() * amp).transpose());
  return {std::move(out), psi.cutoff()};
}

FockVector apply(const FockMatrix& single, const FockVector& psi, Mode mode) {
  if (single.mode_count() != 1 || psi.mode_count() != 2 || single.cutoff() != psi.cutoff()) {
    throw ShapeError("apply: needs a single-mode operator and a two-mode state of equal cutoff");
  }
  const Eigen::Index d = psi.cutoff() + 1;
  Eigen::Map<const Matrix> amp(psi.data().data(), d, d);
  Vector out(d * d);
  Eigen::Map<Matrix> res(out.data(), d, d);
  if (mode == Mode::original) {
    res.noalias() = single.data() * amp;
  } else {
    res.noalias() = amp * single.data().transpose();
  }
  return {std::move(out), psi.cutoff(), 2};
}

FockMatrix projector(const FockVector& psi) {
  return {psi.data() * psi.data().adjoint(), psi.cutoff(), psi.mode_count()};
}

Complex expectation(const FockVector& psi, const FockMatrix& op) {
  if (op.cutoff() != psi.cutoff() || op.mode_count() != psi.mode_count()) {
    throw ShapeError("expectation: different Fock layouts");
  }
  return psi.data().dot(op.data() * psi.data());
}

FockMatrix crop(const FockMatrix& m, int cutoff) {
  if (m.mode_count() != 1) throw ShapeError("crop: single-mode only");
  if (cutoff > m.cutoff()) throw ShapeError("crop: target cutoff exceeds source");
  const Eigen::Index d = cutoff + 1;
  return {m.data().topLeftCorner(d, d), cutoff};
}

double hermiticity_defect(const FockMatrix& m) {
  return (m.data() - m.data().adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_difference(const FockMatrix& a, const FockMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("max_abs_difference: dimension mismatch");
  return (a.data() - b.data()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const FockMatrix& m) {
  const Matrix herm = 0.5 * (m.data() + m.data().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace thermoqubit
