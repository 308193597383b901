#pragma once
// Scalar comparisons between process matrices and between states.
//
// Process matrices in the {I, Lambda_i} basis do not have unit trace, so
// both process metrics act on trace-normalized copies chi / Tr chi.

#include "qqpt/algebra.hpp"
#include "qqpt/qpt.hpp"

namespace qqpt {

/// Uhlmann-Jozsa fidelity [Tr sqrt(sqrt(a) b sqrt(a))]^2 of two PSD matrices.
double uhlmann_fidelity(const CMatrixN& a, const CMatrixN& b);

/// sqrt(Tr[(a - b)^2]) for Hermitian a, b.
double hs_distance(const CMatrixN& a, const CMatrixN& b);

CMatrixN trace_normalized(const ProcessMatrix& chi);

double process_fidelity(const ProcessMatrix& chi0, const ProcessMatrix& chid);
double process_distance(const ProcessMatrix& chi0, const ProcessMatrix& chid);

/// <2|rho|2>. Throws std::invalid_argument if |Im rho_22| > 1e-9.
double transfer_fidelity(const CMatrix3& rho);

}  // namespace qqpt
