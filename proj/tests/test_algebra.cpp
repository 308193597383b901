#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qqpt/algebra.hpp"
#include "test_support.hpp"

using namespace qqpt;

TEST_CASE("gell_mann matrices match their defining entries") {
  CMatrix3 l1 = CMatrix3::Zero();
  l1(0, 1) = 1.0;
  l1(1, 0) = 1.0;
  CHECK(max_abs(gell_mann(1) - l1) == 0.0);

  const double s = 1.0 / std::sqrt(3.0);
  CMatrix3 l8 = CMatrix3::Zero();
  l8.diagonal() << s, s, -2.0 * s;
  CHECK(max_abs(gell_mann(8) - l8) == 0.0);

  CHECK(gell_mann(5)(0, 2) == Complex(0.0, -1.0));
  CHECK(gell_mann(5)(2, 0) == Complex(0.0, 1.0));
  CHECK(gell_mann(7)(1, 2) == Complex(0.0, -1.0));

  for (int i = 1; i <= 8; ++i) {
    CAPTURE(i);
    const CMatrix3 g = gell_mann(i);
    CHECK(std::abs(g.trace()) < 1e-15);
    CHECK(hermiticity_residual(g) == 0.0);
    CHECK(std::abs((g * g).trace() - 2.0) < 1e-14);
  }
}

TEST_CASE("gell_mann rejects out-of-range indices") {
  CHECK_THROWS_AS(gell_mann(0), std::out_of_range);
  CHECK_THROWS_AS(gell_mann(9), std::out_of_range);
}

TEST_CASE("operator basis is orthogonal with norms 3 and 2") {
  const OperatorBasis& e = operator_basis();
  for (int i = 0; i < kBasisSize; ++i) {
    CHECK(is_hermitian(e[i], 0.0));
    for (int j = 0; j < kBasisSize; ++j) {
      const Complex ip = (e[i] * e[j].adjoint()).trace();
      const double want = i != j ? 0.0 : (i == 0 ? 3.0 : 2.0);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(std::abs(ip - want) < 1e-15);
    }
  }
}

TEST_CASE("state basis is |p><q| in row-major order and orthonormal") {
  const StateBasis& s = state_basis();
  int hermitian = 0;
  for (int k = 0; k < kBasisSize; ++k) {
    CHECK(s[k](k / 3, k % 3) == Complex(1.0, 0.0));
    CHECK(s[k].cwiseAbs().sum() == 1.0);
    if (is_hermitian(s[k], 0.0)) ++hermitian;
    for (int j = 0; j < kBasisSize; ++j) CHECK(std::abs(hs_inner(s[j], s[k]) - (j == k ? 1.0 : 0.0)) < 1e-15);
  }
  CHECK(hermitian == 3);
}

TEST_CASE("state basis expansion is complete") {
  const StateBasis& s = state_basis();
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix3 m = testing::random_matrix(3);
    CMatrix3 rebuilt = CMatrix3::Zero();
    for (int k = 0; k < kBasisSize; ++k) rebuilt += hs_inner(s[k], m) * s[k];
    CHECK(max_abs(rebuilt - m) <= 1e-14);
  }
}

TEST_CASE("hermitian_eig on simple inputs") {
  SUBCASE("diagonal") {
    CMatrixN d = CMatrixN::Zero(3, 3);
    d.diagonal() << 3.0, 1.0, 2.0;
    const HermitianEigen eig = hermitian_eig(d);
    CHECK(eig.values(0) == doctest::Approx(1.0));
    CHECK(eig.values(1) == doctest::Approx(2.0));
    CHECK(eig.values(2) == doctest::Approx(3.0));
    // eigenvectors are a (phased) permutation of the identity
    CHECK(max_abs(eig.vectors.cwiseAbs().cast<Complex>() * eig.vectors.cwiseAbs().transpose().cast<Complex>() -
                  CMatrixN::Identity(3, 3)) < 1e-14);
  }
  SUBCASE("Lambda_5 has spectrum -1, 0, 1") {
    const HermitianEigen eig = hermitian_eig(gell_mann(5));
    CHECK(eig.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(eig.values(1)) < 1e-14);
    CHECK(eig.values(2) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("rank-one input has a single nonzero eigenvalue") {
    const CMatrixN p = testing::random_psd(9, 1);
    const HermitianEigen eig = hermitian_eig(p);
    for (int i = 0; i < 8; ++i) CHECK(std::abs(eig.values(i)) < 1e-8 * eig.values(8));
  }
  SUBCASE("non-Hermitian input is rejected") {
    CHECK_THROWS_AS(hermitian_eig(testing::random_matrix(4)), std::invalid_argument);
  }
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  for (int n : {3, 9, 81}) {
    for (int trial = 0; trial < 3; ++trial) {
      const CMatrixN m = testing::random_hermitian(n);
      const HermitianEigen eig = hermitian_eig(m);
      CAPTURE(n);
      CHECK(max_abs(eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint() - m) <= 1e-10);
      CHECK(max_abs(eig.vectors.adjoint() * eig.vectors - CMatrixN::Identity(n, n)) <= 1e-10);
      for (int i = 1; i < n; ++i) CHECK(eig.values(i - 1) <= eig.values(i));
    }
  }
}

TEST_CASE("sqrt_psd") {
  CHECK(max_abs(sqrt_psd(CMatrixN::Identity(9, 9)) - CMatrixN::Identity(9, 9)) < 1e-14);

  CMatrixN d = CMatrixN::Zero(9, 9);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  CMatrixN want = CMatrixN::Zero(9, 9);
  want(0, 0) = 2.0;
  want(1, 1) = 3.0;
  CHECK(max_abs(sqrt_psd(d) - want) < 1e-14);

  for (int trial = 0; trial < 10; ++trial) {
    const CMatrixN p = testing::random_psd(9, 1 + trial % 9);
    const CMatrixN r = sqrt_psd(p);
    CHECK(hermiticity_residual(r) < 1e-10);
    CHECK(max_abs(r * r - p) <= 1e-8 * std::max(1.0, max_abs(p)));
    CHECK(hermitian_eig(0.5 * (r + r.adjoint())).values.minCoeff() >= -1e-8);
  }

  SUBCASE("tiny negative eigenvalues are clamped, large ones rejected") {
    CMatrixN m = CMatrixN::Zero(3, 3);
    m(0, 0) = 1.0;
    m(1, 1) = -5e-9;
    CHECK_NOTHROW(sqrt_psd(m));
    m(1, 1) = -1e-6;
    CHECK_THROWS_AS(sqrt_psd(m), NumericalError);
  }
}

TEST_CASE("solve_linear") {
  const CVectorN b = testing::random_matrix(9).col(0);
  CHECK(max_abs(solve_linear(CMatrixN::Identity(9, 9), b).x - b) == 0.0);

  CVectorN ramp(5);
  CVectorN want(5);
  for (int i = 0; i < 5; ++i) {
    ramp(i) = 2.0 * (i + 1);
    want(i) = i + 1.0;
  }
  const LinearSolution two = solve_linear(2.0 * CMatrixN::Identity(5, 5), ramp);
  CHECK(max_abs(two.x - want) < 1e-15);
  CHECK(two.condition == doctest::Approx(1.0));

  SUBCASE("round trip on random well-conditioned systems") {
    for (int trial = 0; trial < 10; ++trial) {
      const CMatrixN a = testing::random_matrix(81) + 20.0 * CMatrixN::Identity(81, 81);
      const CVectorN x = testing::random_matrix(81).col(0);
      const LinearSolution sol = solve_linear(a, a * x);
      CHECK(max_abs(sol.x - x) <= 1e-9 * max_abs(x));
      CHECK(sol.residual <= 1e-9 * (a * x).cwiseAbs().maxCoeff());
      CHECK(sol.condition >= 1.0);
    }
  }

  SUBCASE("singular and malformed systems") {
    CMatrixN s = CMatrixN::Identity(3, 3);
    s(2, 2) = 0.0;
    CHECK_THROWS_AS(solve_linear(s, CVectorN::Ones(3)), NumericalError);
    CHECK_THROWS_AS(solve_linear(CMatrixN::Identity(3, 3), CVectorN::Ones(4)), std::invalid_argument);
  }
}

TEST_CASE("density matrix predicate") {
  CHECK(is_density_matrix(testing::random_density()));
  CHECK_FALSE(is_density_matrix(2.0 * ket_bra(0, 0)));
  CMatrix3 neg = ket_bra(0, 0) * 1.5 - ket_bra(1, 1) * 0.5;
  CHECK_FALSE(is_density_matrix(neg));
}
