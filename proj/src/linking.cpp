#include "linkalg/linking.hpp"

namespace linkalg {

LinkingPresentation::LinkingPresentation(HermitianForm form)
    : form_(std::move(form)),
      det_(determinant(form_.gram())),
      adj_(adjugate(form_.gram())) {
  if (det_.is_zero())
    throw std::invalid_argument("LinkingPresentation: degenerate form");
  PolyMatrix prod = form_.gram() * adj_;
  PolyMatrix expected = poly_identity(rank());
  for (Eigen::Index i = 0; i < rank(); ++i)
    for (Eigen::Index j = 0; j < rank(); ++j) expected(i, j) *= det_;
  if (!matrix_equal(prod, expected))
    throw std::logic_error("LinkingPresentation: adjugate identity failed");
}

bool LinkingPresentation::in_image(const PolyVector& x) const {
  PolyVector w = adj_ * x;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (!divides(det_, w(i))) return false;
  return true;
}

namespace {

// In the coordinates where the cokernel relations are the columns of the
// Gram matrix, the pairing of coset vectors is involute(x)^T * adj * y /
// det.  On conj-symmetric values (every rank-one instance) this coincides
// with its mirror x^T * adj * involute(y) / det.
RatValue pairing_value(const LinkingPresentation& p, const PolyVector& x,
                       const PolyVector& y) {
  if (x.size() != p.rank() || y.size() != p.rank())
    throw std::invalid_argument("pairing: vector length mismatch");
  LaurentPoly num =
      (involute_entries(x).transpose() * p.adj() * y)(0, 0);
  return RatValue(num, p.det());
}

}  // namespace

QClass boundary_pairing(const LinkingPresentation& p, const PolyVector& x,
                        const PolyVector& y) {
  return QClass(pairing_value(p, x, y), QGroup::QtModZt);
}

QClass boundary_refinement(const LinkingPresentation& p,
                           const PolyVector& y) {
  if (!is_even(p.form()))
    throw std::invalid_argument(
        "boundary_refinement: form not even, refinement undefined");
  return QClass(pairing_value(p, y, y), QGroup::Q1);
}

TorsionIsometry::TorsionIsometry(PolyMatrix map, LinkingPresentation source,
                                 LinkingPresentation target)
    : map_(std::move(map)),
      source_(std::move(source)),
      target_(std::move(target)) {
  if (map_.rows() != target_.rank() || map_.cols() != source_.rank())
    throw std::invalid_argument("TorsionIsometry: dimension mismatch");
  // Descent: the map must carry the source relations into the target
  // relations, i.e. every column of map * G0 lies in the image of G1.
  PolyMatrix carried = map_ * source_.form().gram();
  for (Eigen::Index j = 0; j < carried.cols(); ++j) {
    if (!target_.in_image(carried.col(j)))
      throw std::invalid_argument(
          "TorsionIsometry: matrix does not descend to the cokernels");
  }
}

namespace {

PolyVector unit_vector(Eigen::Index n, Eigen::Index i) {
  PolyVector e(n);
  for (Eigen::Index k = 0; k < n; ++k) e(k) = LaurentPoly(k == i ? 1 : 0);
  return e;
}

}  // namespace

bool verify_linking_isometry(const TorsionIsometry& h, bool quadratic) {
  const LinkingPresentation& p0 = h.source();
  const LinkingPresentation& p1 = h.target();
  const Eigen::Index n = p0.rank();
  for (Eigen::Index i = 0; i < n; ++i) {
    PolyVector ei = unit_vector(n, i);
    PolyVector hei = h.map() * ei;
    for (Eigen::Index j = 0; j < n; ++j) {
      PolyVector ej = unit_vector(n, j);
      if (!qclass_equal(boundary_pairing(p1, hei, h.map() * ej),
                        boundary_pairing(p0, ei, ej)))
        return false;
    }
  }
  if (!quadratic) return true;
  // The refinement is not linear; generators plus pairwise sums suffice by
  // the polarization identity.
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      PolyVector v = unit_vector(n, i);
      if (j != i) v += unit_vector(n, j);
      if (!qclass_equal(boundary_refinement(p1, h.map() * v),
                        boundary_refinement(p0, v)))
        return false;
    }
  return true;
}

TorsionIsometry boundary_action(const FormIsometry& f,
                                const LinkingPresentation& p0,
                                const LinkingPresentation& p1) {
  if (!is_isometry(f, p0.form(), p1.form()))
    throw std::invalid_argument("boundary_action: F is not an isometry");
  // The dual map of F acts on coset vectors as the transpose; the boundary
  // action is its inverse.  It descends exactly: (F^T)^{-1} G0 = G1 *
  // involute(F) by the isometry equation.
  PolyMatrix c = f.matrix.transpose();
  LaurentPoly det_c = determinant(c);
  auto unit = unit_decompose(det_c);
  if (!unit)
    throw std::invalid_argument(
        "boundary_action: F is not invertible over the ring");
  LaurentPoly unit_inv = LaurentPoly::term(unit->sign, -unit->exponent);
  PolyMatrix inv = adjugate(c);
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j) inv(i, j) *= unit_inv;
  return TorsionIsometry(std::move(inv), p0, p1);
}

QClass blanchfield_pairing(const LinkingPresentation& p, const PolyVector& x,
                           const PolyVector& y) {
  return -boundary_pairing(p, x, y);
}

QClass blanchfield_refinement(const LinkingPresentation& p,
                              const PolyVector& y) {
  return -boundary_refinement(p, y);
}

}  // namespace linkalg
