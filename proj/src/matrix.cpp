#include "linkalg/matrix.hpp"

namespace linkalg {

PolyMatrix involute_transpose(const PolyMatrix& m) {
  PolyMatrix r = m.transpose();
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) = involute(r(i, j));
  return r;
}

PolyVector involute_entries(const PolyVector& v) {
  PolyVector r = v;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = involute(r(i));
  return r;
}

PolyMatrix involute_entries(const PolyMatrix& m) {
  PolyMatrix r = m;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) = involute(r(i, j));
  return r;
}

bool matrix_equal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

namespace {

PolyMatrix drop_row_col(const PolyMatrix& m, Eigen::Index row,
                        Eigen::Index col) {
  const Eigen::Index n = m.rows();
  PolyMatrix r(n - 1, n - 1);
  for (Eigen::Index i = 0, ri = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, rj = 0; j < n; ++j) {
      if (j == col) continue;
      r(ri, rj) = m(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

}  // namespace

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  LaurentPoly det;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m(i, 0).is_zero()) continue;
    LaurentPoly minor_det = determinant(drop_row_col(m, i, 0));
    if (i % 2 == 0)
      det += m(i, 0) * minor_det;
    else
      det -= m(i, 0) * minor_det;
  }
  return det;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("adjugate: non-square matrix");
  const Eigen::Index n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = LaurentPoly(1);
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      LaurentPoly cof = determinant(drop_row_col(m, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;  // transposed cofactor
    }
  return adj;
}

IntMatrix eval_at_one(const PolyMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).eval_at_one();
  return r;
}

PolyMatrix poly_identity(Eigen::Index n) {
  PolyMatrix r(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      r(i, j) = LaurentPoly(i == j ? 1 : 0);
  return r;
}

}  // namespace linkalg
