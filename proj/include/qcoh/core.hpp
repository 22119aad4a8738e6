#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qcoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default absolute tolerance for all validation checks.
inline constexpr double kDefaultTol = 1e-10;

/// Input data failed a physical-validity check (non-Hermitian, negative
/// eigenvalue, broken trace or completeness, ...).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed beyond tolerance.
/// Signals a numerics bug, not bad user input.
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Labels a bipartite space. Convention throughout: the ancilla A is the
/// left (slow) tensor factor, so the joint basis ket |a,s> sits at row
/// a * dim_s + s.
struct BipartiteLabel {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_s = 0;

  Eigen::Index total() const { return dim_a * dim_s; }
};

enum class Subsystem { A, S };

/// Hermitian, positive-semidefinite, unit-trace matrix in a fixed reference
/// basis. Validation happens once at construction; instances are immutable.
class DensityMatrix {
 public:
  /// Checks Hermiticity (max |M - M^dag| entry <= tol), spectrum >= -tol and
  /// |trace - 1| <= tol, then stores the Hermitized matrix (M + M^dag) / 2.
  /// Throws validation_error on failure.
  static DensityMatrix validated(const Matrix& m, double tol = kDefaultTol);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  double tolerance() const { return tol_; }

 private:
  DensityMatrix(Matrix m, double tol) : mat_(std::move(m)), tol_(tol) {}

  Matrix mat_;
  double tol_;
};

/// Ascending real eigenvalues of a Hermitian matrix. Values in [-tol, 0)
/// are clipped to 0 so they are safe for entropy sums downstream.
/// Throws validation_error if m is not Hermitian within tol.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m, double tol = kDefaultTol);

/// S(rho) = -sum_i lambda_i log2 lambda_i, in bits, with 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho || sigma) = tr[rho (log2 rho - log2 sigma)], in bits. Returns
/// +infinity when rho has weight above tolerance on sigma's near-null
/// eigenspace (support condition).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Diagonal part in the reference basis: rho^d = sum_i |i><i| rho |i><i|.
DensityMatrix dephase(const DensityMatrix& rho);

/// Dephasing of the S factor only: zeroes every entry whose two S indices
/// differ. Trace-preserving and idempotent.
DensityMatrix dephase_s(const DensityMatrix& omega, const BipartiteLabel& label);

/// Reduced state of the kept subsystem.
DensityMatrix partial_trace(const DensityMatrix& omega, const BipartiteLabel& label,
                            Subsystem keep);

/// I(A:S) = S(rho_A) + S(rho_S) - S(rho_AS), in bits.
double mutual_information(const DensityMatrix& omega, const BipartiteLabel& label);

namespace detail {

/// Shannon entropy in bits of a nonnegative weight vector (need not be
/// normalized); entries <= 0 are skipped.
double entropy_bits(const Eigen::VectorXd& weights);

/// Entropy in bits of a Hermitian PSD matrix, via its eigenvalues.
double entropy_bits(const Matrix& hermitian_psd);

}  // namespace detail

}  // namespace qcoh
