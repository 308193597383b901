#include "qqpt/qpt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qqpt {

BetaMatrix build_beta(const OperatorBasis& ops, const StateBasis& states) {
  BetaMatrix out;
  out.beta = CMatrixN::Zero(kSuperSize, kSuperSize);
  for (int j = 0; j < kBasisSize; ++j) {
    for (int m = 0; m < kBasisSize; ++m) {
      const CMatrix3 left = ops[m] * states[j];
      for (int n = 0; n < kBasisSize; ++n) {
        const CMatrix3 image = left * ops[n].adjoint();
        // rho_k = |p_k><q_k|, so the expansion coefficient is an entry lookup.
        for (int k = 0; k < kBasisSize; ++k) {
          out.beta(kBasisSize * j + k, kBasisSize * m + n) = image(StateBasis::row_of(k), StateBasis::col_of(k));
        }
      }
    }
  }
  Eigen::PartialPivLU<CMatrixN> lu(out.beta);
  out.condition = 1.0 / lu.rcond();
  return out;
}

const BetaMatrix& standard_beta() {
  static const BetaMatrix beta = build_beta(operator_basis(), state_basis());
  return beta;
}

LambdaVector lambda_from_outputs(const std::vector<CMatrix3>& outputs, const StateBasis& states) {
  (void)states;
  if (outputs.size() != static_cast<std::size_t>(kBasisSize)) {
    throw std::invalid_argument("lambda_from_outputs: expected 9 process outputs");
  }
  LambdaVector lambda(kSuperSize);
  for (int j = 0; j < kBasisSize; ++j)
    for (int k = 0; k < kBasisSize; ++k)
      lambda(kBasisSize * j + k) = outputs[j](StateBasis::row_of(k), StateBasis::col_of(k));
  return lambda;
}

LambdaVector extract_lambda(const ProcessMap& process, const StateBasis& states) {
  std::vector<CMatrix3> outputs;
  outputs.reserve(kBasisSize);
  for (int j = 0; j < kBasisSize; ++j) outputs.push_back(process(states[j]));
  return lambda_from_outputs(outputs, states);
}

LambdaVector extract_lambda(const BatchProcessMap& process, const StateBasis& states) {
  const std::vector<CMatrix3> inputs(states.elements.begin(), states.elements.end());
  return lambda_from_outputs(process(inputs), states);
}

ProcessMatrix reconstruct_chi(const BetaMatrix& beta, const LambdaVector& lambda) {
  if (lambda.size() != kSuperSize) throw std::invalid_argument("reconstruct_chi: lambda must have 81 entries");
  const LinearSolution sol = solve_linear(beta.beta, lambda);
  ProcessMatrix out;
  for (int m = 0; m < kBasisSize; ++m)
    for (int n = 0; n < kBasisSize; ++n) out.chi(m, n) = sol.x(kBasisSize * m + n);
  const double asym = hermiticity_residual(out.chi);
  if (asym > 1e-8) {
    throw NumericalError("reconstruct_chi: chi not Hermitian (residual " + std::to_string(asym) +
                         "); process map is not linear or outputs are corrupted");
  }
  out.chi = 0.5 * (out.chi + out.chi.adjoint()).eval();
  return out;
}

CMatrix3 apply_chi(const ProcessMatrix& chi, const CMatrix3& rho, const OperatorBasis& ops) {
  CMatrix3 out = CMatrix3::Zero();
  for (int m = 0; m < kBasisSize; ++m) {
    const CMatrix3 left = ops[m] * rho;
    for (int n = 0; n < kBasisSize; ++n) out += chi(m, n) * (left * ops[n].adjoint());
  }
  return out;
}

ProcessMatrix chi_of_unitary(const CMatrix3& u, const OperatorBasis& ops) {
  CVectorN c(kBasisSize);
  for (int m = 0; m < kBasisSize; ++m) c(m) = hs_inner(ops[m], u) / hs_inner(ops[m], ops[m]).real();
  return {c * c.adjoint()};
}

ValidationReport validate_chi(const ProcessMatrix& chi, const OperatorBasis& ops) {
  ValidationReport r;
  r.hermiticity_residual = hermiticity_residual(chi.chi);
  r.trace = chi.trace();

  CMatrix3 completeness = CMatrix3::Zero();
  for (int m = 0; m < kBasisSize; ++m)
    for (int n = 0; n < kBasisSize; ++n) completeness += chi(m, n) * (ops[n].adjoint() * ops[m]);
  r.tp_residual = max_abs(completeness - CMatrix3::Identity());

  // Eigenvalues of the Hermitian part so the report exists even for bad input.
  const CMatrixN herm = 0.5 * (chi.chi + chi.chi.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrixN> es(herm, Eigen::EigenvaluesOnly);
  const RVectorN& vals = es.eigenvalues();
  r.min_eigenvalue = vals.minCoeff();
  const double largest = vals.maxCoeff();
  r.kraus_rank = static_cast<int>(std::count_if(vals.begin(), vals.end(), [&](double v) { return v > 1e-8 * largest; }));
  return r;
}

std::vector<CMatrix3> kraus_from_chi(const ProcessMatrix& chi, const OperatorBasis& ops) {
  const HermitianEigen eig = hermitian_eig(chi.chi);
  const double largest = eig.values.maxCoeff();
  std::vector<CMatrix3> kraus;
  for (int i = kBasisSize - 1; i >= 0; --i) {
    const double eta = eig.values(i);
    if (eta < -1e-8) throw NumericalError("kraus_from_chi: chi eigenvalue " + std::to_string(eta) + " below -1e-8");
    if (eta <= 1e-12 * largest) continue;
    CMatrix3 e = CMatrix3::Zero();
    for (int m = 0; m < kBasisSize; ++m) e += eig.vectors(m, i) * ops[m];
    kraus.push_back(std::sqrt(eta) * e);
  }
  return kraus;
}

CMatrix3 apply_kraus(const std::vector<CMatrix3>& kraus, const CMatrix3& rho) {
  CMatrix3 out = CMatrix3::Zero();
  for (const CMatrix3& e : kraus) out += e * rho * e.adjoint();
  return out;
}

double diagonal_weight_share(const ProcessMatrix& chi) {
  return chi.chi.diagonal().cwiseAbs().sum() / chi.chi.cwiseAbs().sum();
}

}  // namespace qqpt
