#include "qqpt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qqpt {

namespace {

// x with m = x x^dagger, restricted to eigenvalues above round-off.
CMatrixN psd_factor(const CMatrixN& m) {
  const HermitianEigen eig = hermitian_eig(m);
  const double lowest = eig.values.minCoeff();
  if (lowest < -1e-8) throw NumericalError("uhlmann_fidelity: eigenvalue " + std::to_string(lowest) + " below -1e-8");
  const double floor = 1e-14 * std::max(eig.values.maxCoeff(), 0.0);
  std::vector<int> keep;
  for (int i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) > floor) keep.push_back(i);
  CMatrixN x(m.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) x.col(c) = eig.vectors.col(keep[c]) * std::sqrt(eig.values(keep[c]));
  return x;
}

}  // namespace

// Tr sqrt(sqrt(a) b sqrt(a)) is the nuclear norm of x^dagger y.
double uhlmann_fidelity(const CMatrixN& a, const CMatrixN& b) {
  const CMatrixN x = psd_factor(a);
  const CMatrixN y = psd_factor(b);
  if (x.cols() == 0 || y.cols() == 0) return 0.0;
  const Eigen::JacobiSVD<CMatrixN> svd(x.adjoint() * y);
  const double t = svd.singularValues().sum();
  return t * t;
}

double hs_distance(const CMatrixN& a, const CMatrixN& b) {
  const CMatrixN d = a - b;
  return std::sqrt(std::max((d * d).trace().real(), 0.0));
}

CMatrixN trace_normalized(const ProcessMatrix& chi) {
  const double tr = chi.trace().real();
  if (!(tr > 0.0)) throw NumericalError("trace_normalized: chi has non-positive trace");
  return chi.chi / tr;
}

double process_fidelity(const ProcessMatrix& chi0, const ProcessMatrix& chid) {
  return uhlmann_fidelity(trace_normalized(chi0), trace_normalized(chid));
}

double process_distance(const ProcessMatrix& chi0, const ProcessMatrix& chid) {
  return hs_distance(trace_normalized(chi0), trace_normalized(chid));
}

double transfer_fidelity(const CMatrix3& rho) {
  if (std::abs(rho(2, 2).imag()) > 1e-9) throw std::invalid_argument("transfer_fidelity: <2|rho|2> has imaginary part");
  return rho(2, 2).real();
}

}  // namespace qqpt
