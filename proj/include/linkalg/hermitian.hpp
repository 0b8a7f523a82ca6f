#pragma once

#include "linkalg/matrix.hpp"
#include "linkalg/rational.hpp"

namespace linkalg {

bool is_hermitian(const PolyMatrix& g);

/// Hermitian form over Z[t^{+-1}] presented by its Gram matrix, with the
/// pairing convention lambda(x, y) = x^T * gram * involute(y).  Rank 0 is
/// legal and acts as the identity for block sums.
class HermitianForm {
public:
  HermitianForm() : gram_(0, 0) {}
  explicit HermitianForm(PolyMatrix gram);

  const PolyMatrix& gram() const { return gram_; }
  Eigen::Index rank() const { return gram_.rows(); }

private:
  PolyMatrix gram_;
};

/// Candidate isometry of Hermitian forms, as a matrix over Z[t^{+-1}].
struct FormIsometry {
  PolyMatrix matrix;
};

// Nondegenerate <=> nonzero determinant <=> the adjoint map is injective.
bool is_nondegenerate(const HermitianForm& g);

// Even <=> every diagonal entry is of the form a + involute(a); cross terms
// contribute c + conj(c) to any self-pairing, so the diagonal criterion is
// complete.
bool is_even(const HermitianForm& g);

// True iff F^T * g1 * involute(F) = g0.
bool is_isometry(const FormIsometry& f, const HermitianForm& g0,
                 const HermitianForm& g1);

// Block sum with the hyperbolic plane [[0,1],[1,0]].
HermitianForm stabilize_hyperbolic(const HermitianForm& g);

// Signature of the integer symmetric matrix g(1), for forms nondegenerate
// at t = 1.
long signature_at_one(const HermitianForm& g);

// Fraction-free (Bareiss) symmetric elimination with symmetric pivoting;
// returns #positive - #negative pivots.  Throws if the matrix is singular.
long signature_of_integer_symmetric(IntMatrix a);

}  // namespace linkalg
