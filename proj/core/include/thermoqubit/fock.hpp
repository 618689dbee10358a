#pragma once

// Truncated Fock-space linear algebra for one mode or a mode plus its tilde
// copy.
//
// Two-mode index convention: composite = n_tilde * (cutoff + 1) + n, so the
// original mode runs fastest. Every two-mode routine in the library (tensor
// products, partial traces, the Bogoliubov unitary) follows it.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace thermoqubit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when a matrix or vector does not fit the requested Fock layout.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode { original, tilde };

/// Basis dimension of `mode_count` modes truncated at `cutoff`.
std::size_t fock_dimension(int cutoff, int mode_count);

class FockMatrix {
 public:
  FockMatrix(Matrix data, int cutoff, int mode_count = 1);

  static FockMatrix zero(int cutoff, int mode_count = 1);
  static FockMatrix identity(int cutoff, int mode_count = 1);

  const Matrix& data() const { return data_; }
  int cutoff() const { return cutoff_; }
  int mode_count() const { return mode_count_; }
  std::size_t dim() const { return static_cast<std::size_t>(data_.rows()); }

  Complex operator()(std::size_t row, std::size_t col) const {
    return data_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  FockMatrix adjoint() const;
  Complex trace() const { return data_.trace(); }

  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);
  friend FockMatrix operator+(const FockMatrix& a, const FockMatrix& b);
  friend FockMatrix operator-(const FockMatrix& a, const FockMatrix& b);
  friend FockMatrix operator*(Complex s, const FockMatrix& a);

 private:
  Matrix data_;
  int cutoff_;
  int mode_count_;
};

class FockVector {
 public:
  FockVector(Vector data, int cutoff, int mode_count = 1);

  /// |n> for one mode, or |n, n_tilde> for two modes.
  static FockVector basis(int cutoff, int n, int n_tilde = -1);

  const Vector& data() const { return data_; }
  int cutoff() const { return cutoff_; }
  int mode_count() const { return mode_count_; }
  std::size_t dim() const { return static_cast<std::size_t>(data_.size()); }
  double norm() const { return data_.norm(); }

  Complex operator[](std::size_t i) const { return data_(static_cast<Eigen::Index>(i)); }

  friend FockVector operator*(const FockMatrix& m, const FockVector& v);

 private:
  Vector data_;
  int cutoff_;
  int mode_count_;
};

struct Ladder {
  FockMatrix lowering;
  FockMatrix raising;
};

/// a and a† on {|0>, ..., |cutoff>}. The raising operator drops whatever would
/// land above the cutoff.
Ladder build_ladder(int cutoff);

/// a† a, diagonal 0..cutoff.
FockMatrix number_operator(int cutoff);

/// A on the original mode, B on the tilde mode.
FockMatrix tensor_product(const FockMatrix& original, const FockMatrix& tilde);

/// A ⊗ I when `mode` is original, I ⊗ A when it is tilde.
FockMatrix embed(const FockMatrix& single, Mode mode);

FockMatrix matrix_exponential(const FockMatrix& m);

/// Scaling-and-squaring Padé exponential on a bare square matrix.
Matrix matrix_exponential(const Matrix& m);

FockMatrix partial_trace(const FockMatrix& rho, Mode keep);

/// Reduced density matrix of the pure two-mode state `psi`, i.e.
/// partial_trace(|psi><psi|, keep) without forming the projector.
FockMatrix reduced_density(const FockVector& psi, Mode keep);

/// (A ⊗ I)|psi> or (I ⊗ A)|psi> without building the two-mode operator.
FockVector apply(const FockMatrix& single, const FockVector& psi, Mode mode);

/// |psi><psi|.
FockMatrix projector(const FockVector& psi);

/// <psi| A |psi>.
Complex expectation(const FockVector& psi, const FockMatrix& op);

/// Leading `cutoff + 1` block of a single-mode matrix.
FockMatrix crop(const FockMatrix& m, int cutoff);

/// max |A - A†|.
double hermiticity_defect(const FockMatrix& m);

double max_abs_difference(const FockMatrix& a, const FockMatrix& b);

/// Smallest eigenvalue of the Hermitian part of `m`.
double min_eigenvalue(const FockMatrix& m);

}  // namespace thermoqubit
