#pragma once

#include <vector>

#include "linkalg/linking.hpp"

namespace linkalg {

/// Basis of the union module ker(h pi_0 - pi_1) in H0* + H1* coordinates.
/// The chosen vectors are {(e_i, L e_i)} followed by {(0, G1 f_j)}, where L
/// is the representative matrix of h; this is a free basis because any
/// kernel element (x0, x1) has x1 - L x0 in the image of G1, with a unique
/// preimage since G1 is injective.
struct UnionBasis {
  std::vector<std::pair<PolyVector, PolyVector>> vectors;
};

UnionBasis union_basis(const TorsionIsometry& h);

// Gram matrix of the algebraic union of p0 and -p1 along h, on the basis
// above.  h must preserve the boundary pairing; every entry is then
// guaranteed to lie in Z[t^{+-1}], and a non-integral entry aborts since it
// would mean an invalid isometry slipped past verification.
HermitianForm union_gram(const TorsionIsometry& h);

// Evenness of the union.  Requires both forms even and h at least a
// symmetric isometry; when h also preserves the refinement the result is
// always true, and running with a symmetric-only h exposes counterexamples.
// An optional form isometry, when supplied, is validated against the two
// forms first.
bool check_union_even(const TorsionIsometry& h,
                      const std::optional<FormIsometry>& f = std::nullopt);

// Regluing data for the union: h composed with the inverse boundary action
// of a form isometry f: p0.form() ~ p1.form(), yielding an isometry from p1
// to itself presenting an isometric union.
TorsionIsometry reglue_by_form_isometry(const TorsionIsometry& h,
                                        const FormIsometry& f);

}  // namespace linkalg
