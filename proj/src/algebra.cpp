#include "qqpt/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qqpt {

namespace {
constexpr Complex kI{0.0, 1.0};
}

CMatrix3 gell_mann(int i) {
  CMatrix3 m = CMatrix3::Zero();
  switch (i) {
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = 1.0; m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -kI; m(2, 0) = kI; break;
    case 6: m(1, 2) = 1.0; m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -kI; m(2, 1) = kI; break;
    case 8: {
      const double s = 1.0 / std::sqrt(3.0);
      m(0, 0) = s; m(1, 1) = s; m(2, 2) = -2.0 * s;
      break;
    }
    default:
      throw std::out_of_range("gell_mann: index " + std::to_string(i) + " not in [1, 8]");
  }
  return m;
}

CMatrix3 ket_bra(int p, int q) {
  CMatrix3 m = CMatrix3::Zero();
  m(p, q) = 1.0;
  return m;
}

const OperatorBasis& operator_basis() {
  static const OperatorBasis basis = [] {
    OperatorBasis b;
    b.elements[0] = CMatrix3::Identity();
    for (int i = 1; i <= 8; ++i) b.elements[i] = gell_mann(i);
    return b;
  }();
  return basis;
}

const StateBasis& state_basis() {
  static const StateBasis basis = [] {
    StateBasis b;
    for (int k = 0; k < kBasisSize; ++k) b.elements[k] = ket_bra(StateBasis::row_of(k), StateBasis::col_of(k));
    return b;
  }();
  return basis;
}

double max_abs(const CMatrixN& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_residual(const CMatrixN& m) { return max_abs(m - m.adjoint()); }

bool is_hermitian(const CMatrixN& m, double tol) { return m.rows() == m.cols() && hermiticity_residual(m) <= tol; }

bool is_density_matrix(const CMatrix3& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<CMatrix3> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

Complex hs_inner(const CMatrixN& a, const CMatrixN& b) { return (a.adjoint() * b).trace(); }

HermitianEigen hermitian_eig(const CMatrixN& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: matrix is not square");
  const double asym = hermiticity_residual(m);
  if (asym > 1e-9) throw std::invalid_argument("hermitian_eig: input not Hermitian (residual " + std::to_string(asym) + ")");
  // Eigen only reads the lower triangle; symmetrize so both halves count.
  const CMatrixN sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrixN> es(sym);
  if (es.info() != Eigen::Success) throw NumericalError("hermitian_eig: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

CMatrixN sqrt_psd(const CMatrixN& m, double clamp_tol) {
  const HermitianEigen eig = hermitian_eig(m);
  const double lowest = eig.values.size() ? eig.values.minCoeff() : 0.0;
  if (lowest < -clamp_tol) {
    throw NumericalError("sqrt_psd: eigenvalue " + std::to_string(lowest) + " below -" + std::to_string(clamp_tol));
  }
  const RVectorN roots = eig.values.unaryExpr([](double v) { return std::sqrt(std::max(v, 0.0)); });
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

LinearSolution solve_linear(const CMatrixN& a, const CVectorN& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve_linear: matrix is not square");
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: right-hand side length mismatch");

  const double norm_inf = a.cwiseAbs().rowwise().sum().maxCoeff();
  Eigen::PartialPivLU<CMatrixN> lu(a);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot >= 1e-12 * norm_inf)) {
    throw NumericalError("solve_linear: matrix numerically singular (pivot " + std::to_string(min_pivot) + ")");
  }

  LinearSolution out;
  out.x = lu.solve(b);
  out.condition = 1.0 / lu.rcond();
  out.residual = (a * out.x - b).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace qqpt
