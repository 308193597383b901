#pragma once
// Fixed-size complex matrix numerics for a single qutrit and the two
// operator bases used by process tomography.

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include <Eigen/Dense>

namespace qqpt {

using Complex = std::complex<double>;
using CMatrix3 = Eigen::Matrix3cd;
using CMatrixN = Eigen::MatrixXcd;
using CVectorN = Eigen::VectorXcd;
using RVectorN = Eigen::VectorXd;

inline constexpr int kDim = 3;
inline constexpr int kBasisSize = kDim * kDim;            // 9
inline constexpr int kSuperSize = kBasisSize * kBasisSize;  // 81

/// Raised when a computation produces an unphysical or ill-conditioned result
/// (singular solve, negative eigenvalue beyond clamp tolerance, blow-up).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gell-Mann matrix Lambda_i, i in [1, 8]. Throws std::out_of_range otherwise.
CMatrix3 gell_mann(int i);

/// Ordered operator basis {I, Lambda_1, ..., Lambda_8}. Element 0 is the identity.
struct OperatorBasis {
  std::array<CMatrix3, kBasisSize> elements;

  const CMatrix3& operator[](std::size_t m) const { return elements[m]; }
  static constexpr std::size_t size() { return kBasisSize; }
};

/// Ordered state basis {|p><q|}, element k = 3p + q (zero-based).
struct StateBasis {
  std::array<CMatrix3, kBasisSize> elements;

  const CMatrix3& operator[](std::size_t k) const { return elements[k]; }
  static constexpr std::size_t size() { return kBasisSize; }
  static constexpr int row_of(int k) { return k / kDim; }
  static constexpr int col_of(int k) { return k % kDim; }
};

const OperatorBasis& operator_basis();
const StateBasis& state_basis();

/// |p><q|
CMatrix3 ket_bra(int p, int q);

double max_abs(const CMatrixN& m);
double hermiticity_residual(const CMatrixN& m);
bool is_hermitian(const CMatrixN& m, double tol = 1e-12);

/// Unit trace (to 1e-9) and min eigenvalue >= -1e-9.
bool is_density_matrix(const CMatrix3& m, double tol = 1e-9);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const CMatrixN& a, const CMatrixN& b);

struct HermitianEigen {
  RVectorN values;   // ascending
  CMatrixN vectors;  // columns are orthonormal eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. Requires max|M - M^dagger| <= 1e-9.
HermitianEigen hermitian_eig(const CMatrixN& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-8, 0) are clamped to zero; anything lower raises NumericalError.
CMatrixN sqrt_psd(const CMatrixN& m, double clamp_tol = 1e-8);

struct LinearSolution {
  CVectorN x;
  double condition = 0.0;  // 1-norm condition number estimate
  double residual = 0.0;   // ||A x - b||_inf
};

/// Dense LU solve with partial pivoting. Throws NumericalError when a pivot
/// falls below 1e-12 * ||A||_inf.
LinearSolution solve_linear(const CMatrixN& a, const CVectorN& b);

}  // namespace qqpt
