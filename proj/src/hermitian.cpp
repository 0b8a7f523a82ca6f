#include "linkalg/hermitian.hpp"

namespace linkalg {

bool is_hermitian(const PolyMatrix& g) {
  if (g.rows() != g.cols())
    throw std::invalid_argument("is_hermitian: non-square matrix");
  return matrix_equal(g, involute_transpose(g));
}

HermitianForm::HermitianForm(PolyMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw std::invalid_argument("HermitianForm: non-square Gram matrix");
  if (!is_hermitian(gram_))
    throw std::invalid_argument("HermitianForm: Gram matrix not Hermitian");
}

bool is_nondegenerate(const HermitianForm& g) {
  return !determinant(g.gram()).is_zero();
}

bool is_even(const HermitianForm& g) {
  for (Eigen::Index i = 0; i < g.rank(); ++i)
    if (!is_even_symmetric(g.gram()(i, i))) return false;
  return true;
}

bool is_isometry(const FormIsometry& f, const HermitianForm& g0,
                 const HermitianForm& g1) {
  const PolyMatrix& m = f.matrix;
  if (m.rows() != g1.rank() || m.cols() != g0.rank())
    throw std::invalid_argument("is_isometry: dimension mismatch");
  PolyMatrix lhs = m.transpose() * g1.gram() * involute_entries(m);
  return matrix_equal(lhs, g0.gram());
}

HermitianForm stabilize_hyperbolic(const HermitianForm& g) {
  const Eigen::Index n = g.rank();
  PolyMatrix s(n + 2, n + 2);
  for (Eigen::Index i = 0; i < n + 2; ++i)
    for (Eigen::Index j = 0; j < n + 2; ++j) s(i, j) = LaurentPoly(0);
  s.topLeftCorner(n, n) = g.gram();
  s(n, n + 1) = LaurentPoly(1);
  s(n + 1, n) = LaurentPoly(1);
  return HermitianForm(std::move(s));
}

long signature_at_one(const HermitianForm& g) {
  return signature_of_integer_symmetric(eval_at_one(g.gram()));
}

long signature_of_integer_symmetric(IntMatrix a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n)
    throw std::invalid_argument("signature: non-square matrix");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i))
        throw std::invalid_argument("signature: matrix not symmetric");

  // Bareiss symmetric elimination.  After step k the pivot a(k,k) equals the
  // leading principal (k+1)-minor of a congruent integer matrix, so the
  // signature is read off the signs of consecutive pivots (Jacobi's rule).
  long sig = 0;
  Int prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index j = k + 1;
      for (; j < n; ++j)
        if (a(j, j) != 0) break;
      if (j < n) {
        a.row(k).swap(a.row(j));
        a.col(k).swap(a.col(j));
      } else {
        // Trailing diagonal is all zero; a congruence row/col addition
        // manufactures a nonzero pivot when the block is nonzero.
        for (j = k + 1; j < n; ++j)
          if (a(k, j) != 0) break;
        if (j == n)
          throw std::domain_error("signature: matrix is singular");
        a.row(k) += a.row(j);
        a.col(k) += a.col(j);
      }
    }
    const Int pivot = a(k, k);
    sig += (sgn(pivot) == sgn(prev)) ? 1 : -1;
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) {
        Int v = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;  // exact
        a(i, j) = v;
        a(j, i) = std::move(v);
      }
    prev = pivot;
  }
  return sig;
}

}  // namespace linkalg
