#pragma once

#include "linkalg/hermitian.hpp"

namespace linkalg {

/// Presentation of the torsion module coker(adjoint) = Z[t^{+-1}]^n / G *
/// Z[t^{+-1}]^n of a nondegenerate Hermitian form, with the determinant and
/// adjugate cached at construction.  The cached pair satisfies
/// gram * adj = det * I exactly, which is asserted once here.
class LinkingPresentation {
public:
  explicit LinkingPresentation(HermitianForm form);

  const HermitianForm& form() const { return form_; }
  const LaurentPoly& det() const { return det_; }
  const PolyMatrix& adj() const { return adj_; }
  Eigen::Index rank() const { return form_.rank(); }

  // Membership of x in the column span of the Gram matrix: x = G*u has the
  // unique candidate solution u = adj*x / det, so membership is entrywise
  // divisibility by det.
  bool in_image(const PolyVector& x) const;

private:
  HermitianForm form_;
  LaurentPoly det_;
  PolyMatrix adj_;
};

// The boundary symmetric linking pairing on coset vectors:
// ([x],[y]) -> class of involute(x)^T * adj * y / det in Q(t)/Z[t^{+-1}].
QClass boundary_pairing(const LinkingPresentation& p, const PolyVector& x,
                        const PolyVector& y);

// The quadratic refinement [y] -> class of involute(y)^T * adj * y / det in
// Q1 (the value is conj-symmetric, so this equals y^T adj involute(y) /
// det); defined only for even forms.
QClass boundary_refinement(const LinkingPresentation& p, const PolyVector& y);

/// Candidate isometry of boundary linking forms, as a matrix carrying coset
/// vectors of the source presentation to the target presentation.  The
/// factory checks that the matrix descends to the cokernels.
class TorsionIsometry {
public:
  TorsionIsometry(PolyMatrix map, LinkingPresentation source,
                  LinkingPresentation target);

  const PolyMatrix& map() const { return map_; }
  const LinkingPresentation& source() const { return source_; }
  const LinkingPresentation& target() const { return target_; }

private:
  PolyMatrix map_;
  LinkingPresentation source_, target_;
};

// Checks preservation of the boundary pairing on all generator pairs; with
// quadratic=true additionally checks the refinement on generators and on
// pairwise sums of generators, which by polarization extends the identity to
// the whole module.
bool verify_linking_isometry(const TorsionIsometry& h, bool quadratic);

// The boundary action of a form isometry F: the inverse of its dual map,
// acting on coset vectors as the inverse transpose.  Requires F to be an
// isometry from p0.form() to p1.form(); the result always descends and
// preserves the refinement when the forms are even.
TorsionIsometry boundary_action(const FormIsometry& f,
                                const LinkingPresentation& p0,
                                const LinkingPresentation& p1);

// Manifold-side sign convention: the Blanchfield pairing of a boundary is
// the negative of the boundary pairing of a coboundary form, and likewise
// for its refinement.
QClass blanchfield_pairing(const LinkingPresentation& p, const PolyVector& x,
                           const PolyVector& y);
QClass blanchfield_refinement(const LinkingPresentation& p,
                              const PolyVector& y);

}  // namespace linkalg
