// SPDX-License-Identifier: Apache-2.0
//
// gsm-mimo: energy-efficiency simulator for GSM-aided massive MIMO downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <doctest.h>

#include "gsm_mimo/linalg.hpp"
#include "test_util.hpp"

using namespace gsm_mimo;
using linalg::CMatrixd;
using linalg::Complexd;
using test::random_matrix;

namespace {

CMatrixd triple_loop(const CMatrixd& a, const CMatrixd& b) {
  CMatrixd c = CMatrixd::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index l = 0; l < a.cols(); ++l) c(i, j) += a(i, l) * b(l, j);
  return c;
}

double residual(const CMatrixd& a, const CMatrixd& a_inv) {
  const auto n = a.rows();
  return (a * a_inv - CMatrixd::Identity(n, n)).norm() / CMatrixd::Identity(n, n).norm();
}

}  // namespace

TEST_CASE("matmul") {
  auto rng = test::test_rng(11);
  const CMatrixd a = random_matrix(2, 2, rng);
  CHECK(linalg::matmul(linalg::identity<double>(2), a) == a);

  const CMatrixd i = linalg::from_rows({{Complexd(0, 1)}});
  CHECK(linalg::matmul(i, i)(0, 0) == Complexd(-1, 0));

  const CMatrixd x = random_matrix(2, 3, rng);
  const CMatrixd y = random_matrix(3, 2, rng);
  CHECK((linalg::matmul(x, y) - triple_loop(x, y)).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(linalg::matmul(x, x), DimensionError);
}

TEST_CASE("hermitian") {
  CHECK(linalg::hermitian(linalg::from_rows({{Complexd(1, 2)}}))(0, 0) == Complexd(1, -2));

  const CMatrixd d = linalg::from_rows({{Complexd(3, 0), Complexd(0, 0)}, {Complexd(0, 0), Complexd(-2, 0)}});
  CHECK(linalg::hermitian(d) == d);

  auto rng = test::test_rng(12);
  const CMatrixd a = random_matrix(3, 2, rng);
  const CMatrixd h = linalg::hermitian(a);
  REQUIRE(h.rows() == 2);
  REQUIRE(h.cols() == 3);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) CHECK(h(j, i) == std::conj(a(i, j)));
  CHECK(linalg::hermitian(h) == a);
}

TEST_CASE("inverse") {
  CHECK(linalg::inverse(linalg::identity<double>(4)) == linalg::identity<double>(4));
  CHECK(linalg::inverse(linalg::from_rows({{Complexd(2, 0)}}))(0, 0) == Complexd(0.5, 0));

  SUBCASE("random Hermitian positive definite") {
    auto rng = test::test_rng(13);
    const CMatrixd g = random_matrix(10, 14, rng);
    const CMatrixd a = g * g.adjoint() + CMatrixd::Identity(10, 10);
    CHECK(residual(a, linalg::inverse(a)) < 1e-10);
  }

  SUBCASE("needs pivoting") {
    const CMatrixd a = linalg::from_rows({{Complexd(0, 0), Complexd(1, 0)}, {Complexd(1, 0), Complexd(0, 0)}});
    CHECK(residual(a, linalg::inverse(a)) < 1e-15);
  }

  SUBCASE("singular") {
    const CMatrixd a = linalg::from_rows({{Complexd(1, 1), Complexd(2, 2)}, {Complexd(2, 2), Complexd(4, 4)}});
    CHECK_THROWS_AS(linalg::inverse(a), SingularMatrixError);
    CHECK_THROWS_AS(linalg::inverse(CMatrixd::Zero(3, 3)), SingularMatrixError);
  }

  CHECK_THROWS_AS(linalg::inverse(CMatrixd::Zero(2, 3)), DimensionError);
}

TEST_CASE("inverse residual for condition numbers below 1e6") {
  auto rng = test::test_rng(14);
  double worst = 0.0;
  for (int trial = 0; trial < 600; ++trial) {
    const Eigen::Index n = 2 + trial % 31;
    // U diag(s) U^H with singular values spread over [1e-6 .. 1].
    const Eigen::HouseholderQR<CMatrixd> qr(random_matrix(n, n, rng));
    const CMatrixd u = qr.householderQ() * CMatrixd::Identity(n, n);
    Eigen::VectorXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = std::pow(10.0, -6.0 * rng.uniform() * 0.999);
    s(0) = 1.0;
    s(n - 1) = 1.001e-6;
    const CMatrixd a = u * s.cast<Complexd>().asDiagonal() * u.adjoint();
    worst = std::max(worst, residual(a, linalg::inverse(a)));
  }
  MESSAGE("worst relative residual: " << worst);
  CHECK(worst < 1e-10);
}

TEST_CASE("trace") {
  CHECK(linalg::trace(linalg::identity<double>(3)) == Complexd(3, 0));
  const CMatrixd a = linalg::from_rows({{Complexd(1, 1), Complexd(0, 0)}, {Complexd(0, 0), Complexd(2, -1)}});
  CHECK(linalg::trace(a) == Complexd(3, 0));

  auto rng = test::test_rng(15);
  const CMatrixd r = random_matrix(5, 5, rng);
  Complexd sum{0, 0};
  for (int i = 0; i < 5; ++i) sum += r(i, i);
  CHECK(std::abs(linalg::trace(r) - sum) < 1e-15);
  CHECK_THROWS_AS(linalg::trace(random_matrix(2, 3, rng)), DimensionError);
}

TEST_CASE("hermitian of a product reverses the order") {
  auto rng = test::test_rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = 1 + trial % 6, k = 1 + trial % 4, n = 1 + trial % 5;
    const CMatrixd a = random_matrix(m, k, rng);
    const CMatrixd b = random_matrix(k, n, rng);
    const CMatrixd lhs = linalg::hermitian(linalg::matmul(a, b));
    const CMatrixd rhs = linalg::matmul(linalg::hermitian(b), linalg::hermitian(a));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("trace of a positive definite matrix is real") {
  auto rng = test::test_rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrixd g = random_matrix(6, 9, rng);
    const Complexd t = linalg::trace(linalg::matmul(g, linalg::hermitian(g)));
    CHECK(std::abs(t.imag()) < 1e-10 * std::abs(t));
  }
}

TEST_CASE("from_rows validates input") {
  CHECK_THROWS_AS(linalg::from_rows({{Complexd(1, 0), Complexd(2, 0)}, {Complexd(3, 0)}}), DimensionError);
  CHECK_THROWS_AS(linalg::from_rows({{Complexd(std::nan(""), 0)}}), InvalidArgument);
  CHECK(linalg::all_finite(linalg::identity<double>(2)));
}

TEST_CASE("kernel is generic over the scalar type") {
  const linalg::CMatrix<float> a = linalg::from_rows<float>({{{2.0f, 0.0f}, {0.0f, 1.0f}}, {{0.0f, -1.0f}, {3.0f, 0.0f}}});
  const linalg::CMatrix<float> inv = linalg::inverse(a);
  CHECK(((a * inv) - linalg::identity<float>(2)).norm() < 1e-5f);
  CHECK(linalg::trace(a) == std::complex<float>(5.0f, 0.0f));
}
