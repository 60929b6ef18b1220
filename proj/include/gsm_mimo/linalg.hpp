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


#ifndef GSM_MIMO_LINALG_HPP
#define GSM_MIMO_LINALG_HPP

// Dense complex matrix kernel. Storage and products come from Eigen; the
// inverse is a plain Gauss-Jordan elimination with partial pivoting, which is
// all the K x K (K <= 32) Gram inversions of ZF precoding need.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>

#include <Eigen/Dense>

#include "gsm_mimo/errors.hpp"

namespace gsm_mimo::linalg {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using CMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using CVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

using CMatrixd = CMatrix<double>;
using CVectord = CVector<double>;
using Complexd = Complex<double>;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const auto& z = a(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

// Builds a matrix from nested row lists. Rejects empty, ragged or non-finite
// input.
template <typename Scalar = double>
CMatrix<Scalar> from_rows(
    std::initializer_list<std::initializer_list<Complex<Scalar>>> rows) {
  if (rows.size() == 0 || rows.begin()->size() == 0) {
    throw DimensionError("from_rows: matrix must have at least one row and column");
  }
  const auto n_cols = rows.begin()->size();
  CMatrix<Scalar> out(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(n_cols));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw DimensionError("from_rows: ragged rows");
    Eigen::Index j = 0;
    for (const auto& z : row) out(i, j++) = z;
    ++i;
  }
  if (!all_finite(out)) throw InvalidArgument("from_rows: non-finite entry");
  return out;
}

template <typename Scalar>
CMatrix<Scalar> identity(Eigen::Index n) {
  return CMatrix<Scalar>::Identity(n, n);
}

template <typename DerivedA, typename DerivedB>
auto matmul(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar::value_type;
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  return CMatrix<Scalar>(a * b);
}

template <typename Derived>
auto hermitian(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar::value_type;
  return CMatrix<Scalar>(a.adjoint());
}

template <typename Derived>
auto trace(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("trace: matrix is not square");
  }
  typename Derived::Scalar sum{0};
  for (Eigen::Index i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

// Gauss-Jordan elimination with partial pivoting on [A | I], followed by one
// step of iterative refinement X <- X + X (I - A X). A pivot whose magnitude
// falls below 1e-12 times the largest entry magnitude of the input is treated
// as zero.
template <typename Derived>
auto inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar::value_type;
  if (a.rows() != a.cols()) {
    throw DimensionError("inverse: matrix is not square");
  }
  const Eigen::Index n = a.rows();
  CMatrix<Scalar> work = a;
  CMatrix<Scalar> inv = CMatrix<Scalar>::Identity(n, n);

  Scalar scale{0};
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(work(i, j)));
  }
  const Scalar tol = Scalar(1e-12) * scale;
  if (!(scale > Scalar(0))) throw SingularMatrixError("inverse: zero matrix");

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    Scalar best = std::abs(work(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const Scalar mag = std::abs(work(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (!(best >= tol) || best == Scalar(0)) {
      throw SingularMatrixError("inverse: pivot below tolerance in column " +
                                std::to_string(col));
    }
    if (pivot != col) {
      work.row(col).swap(work.row(pivot));
      inv.row(col).swap(inv.row(pivot));
    }
    const Complex<Scalar> p_inv = Scalar(1) / work(col, col);
    work.row(col) *= p_inv;
    inv.row(col) *= p_inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex<Scalar> f = work(r, col);
      if (f == Complex<Scalar>(0)) continue;
      work.row(r) -= f * work.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  const CMatrix<Scalar> correction = CMatrix<Scalar>::Identity(n, n) - a * inv;
  inv += inv * correction;
  return inv;
}

}  // namespace gsm_mimo::linalg

#endif  // GSM_MIMO_LINALG_HPP
