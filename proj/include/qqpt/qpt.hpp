#pragma once
// Qutrit process tomography in the {I, Lambda_1..Lambda_8} operator basis.
//
// A process eps is probed with the nine inputs rho_j = |p><q| and expanded as
// eps(rho_j) = sum_k lambda_jk rho_k. With E_m rho_j E_n^dagger =
// sum_k beta_jk^mn rho_k, the process matrix solves beta * chi = lambda.
//
// Flattening is row-major and zero-based: row jk -> 9j + k, column mn -> 9m + n.

#include <functional>
#include <vector>

#include "qqpt/algebra.hpp"

namespace qqpt {

struct ProcessMatrix {
  CMatrixN chi = CMatrixN::Zero(kBasisSize, kBasisSize);  // rows/cols ordered (I, L1..L8)

  Complex operator()(int m, int n) const { return chi(m, n); }
  Complex trace() const { return chi.trace(); }
};

using LambdaVector = CVectorN;  // length 81

struct BetaMatrix {
  CMatrixN beta;  // 81 x 81
  double condition = 0.0;
};

using ProcessMap = std::function<CMatrix3(const CMatrix3&)>;
/// Applies a process to several inputs at once (e.g. one batched simulation).
using BatchProcessMap = std::function<std::vector<CMatrix3>(const std::vector<CMatrix3>&)>;

BetaMatrix build_beta(const OperatorBasis& ops, const StateBasis& states);
/// build_beta for the standard bases, computed once.
const BetaMatrix& standard_beta();

/// Coefficients of eps(rho_j) in the state basis, read off as matrix entries.
LambdaVector lambda_from_outputs(const std::vector<CMatrix3>& outputs, const StateBasis& states);
LambdaVector extract_lambda(const ProcessMap& process, const StateBasis& states);
LambdaVector extract_lambda(const BatchProcessMap& process, const StateBasis& states);

/// Solves beta * chi = lambda and reshapes to 9x9. The result is Hermitized
/// when its asymmetry is at most 1e-8; larger asymmetry raises NumericalError.
ProcessMatrix reconstruct_chi(const BetaMatrix& beta, const LambdaVector& lambda);

/// sum_{m,n} E_m rho E_n^dagger chi_mn
CMatrix3 apply_chi(const ProcessMatrix& chi, const CMatrix3& rho, const OperatorBasis& ops);

/// chi of rho -> U rho U^dagger, computed from the expansion coefficients of U.
ProcessMatrix chi_of_unitary(const CMatrix3& u, const OperatorBasis& ops);

struct ValidationReport {
  double hermiticity_residual = 0.0;
  double min_eigenvalue = 0.0;
  double tp_residual = 0.0;  // ||sum chi_mn E_n^dagger E_m - I||_inf
  Complex trace{0.0, 0.0};
  int kraus_rank = 0;        // eigenvalues above 1e-8 * largest

  struct Thresholds {
    double hermiticity = 1e-8;
    double tp = 1e-5;
    double min_eigenvalue = -1e-5;
  };
  bool passes(const Thresholds& t) const {
    return hermiticity_residual <= t.hermiticity && tp_residual <= t.tp && min_eigenvalue >= t.min_eigenvalue;
  }
  bool passes() const { return passes(Thresholds{}); }
};

ValidationReport validate_chi(const ProcessMatrix& chi, const OperatorBasis& ops);

/// Kraus operators from the eigendecomposition of chi; zero-weight terms are
/// dropped. Eigenvalues in [-1e-8, 0) are clamped, lower ones raise.
std::vector<CMatrix3> kraus_from_chi(const ProcessMatrix& chi, const OperatorBasis& ops);

CMatrix3 apply_kraus(const std::vector<CMatrix3>& kraus, const CMatrix3& rho);

/// sum_i |chi_ii| / sum_{m,n} |chi_mn|
double diagonal_weight_share(const ProcessMatrix& chi);

}  // namespace qqpt
