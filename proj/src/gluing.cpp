#include "linkalg/gluing.hpp"

namespace linkalg {

namespace {

PolyVector zero_vector(Eigen::Index n) {
  PolyVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = LaurentPoly(0);
  return v;
}

PolyVector unit_vector(Eigen::Index n, Eigen::Index i) {
  PolyVector v = zero_vector(n);
  v(i) = LaurentPoly(1);
  return v;
}

}  // namespace

UnionBasis union_basis(const TorsionIsometry& h) {
  const Eigen::Index n0 = h.source().rank();
  const Eigen::Index n1 = h.target().rank();
  UnionBasis basis;
  basis.vectors.reserve(static_cast<size_t>(n0 + n1));
  for (Eigen::Index i = 0; i < n0; ++i) {
    PolyVector e = unit_vector(n0, i);
    basis.vectors.emplace_back(e, h.map() * e);
  }
  for (Eigen::Index j = 0; j < n1; ++j) {
    PolyVector f = unit_vector(n1, j);
    basis.vectors.emplace_back(zero_vector(n0), h.target().form().gram() * f);
  }
  return basis;
}

HermitianForm union_gram(const TorsionIsometry& h) {
  if (!verify_linking_isometry(h, false))
    throw std::invalid_argument(
        "union_gram: h does not preserve the boundary pairing");
  const LinkingPresentation& p0 = h.source();
  const LinkingPresentation& p1 = h.target();
  UnionBasis basis = union_basis(h);
  const Eigen::Index n = static_cast<Eigen::Index>(basis.vectors.size());
  PolyMatrix gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& [xi0, xi1] = basis.vectors[static_cast<size_t>(i)];
      const auto& [xj0, xj1] = basis.vectors[static_cast<size_t>(j)];
      RatValue value =
          RatValue((involute_entries(xi0).transpose() * p0.adj() * xj0)(0, 0),
                   p0.det()) -
          RatValue((involute_entries(xi1).transpose() * p1.adj() * xj1)(0, 0),
                   p1.det());
      auto entry = as_ring_element(value);
      if (!entry)
        throw std::logic_error("union_gram: non-integral entry");
      gram(i, j) = *entry;
    }
  return HermitianForm(std::move(gram));
}

bool check_union_even(const TorsionIsometry& h,
                      const std::optional<FormIsometry>& f) {
  if (!is_even(h.source().form()) || !is_even(h.target().form()))
    throw std::invalid_argument("check_union_even: forms must be even");
  if (f && !is_isometry(*f, h.source().form(), h.target().form()))
    throw std::invalid_argument("check_union_even: F is not an isometry");
  return is_even(union_gram(h));
}

TorsionIsometry reglue_by_form_isometry(const TorsionIsometry& h,
                                        const FormIsometry& f) {
  if (!is_isometry(f, h.source().form(), h.target().form()))
    throw std::invalid_argument(
        "reglue_by_form_isometry: F is not an isometry");
  // The boundary action of F is the inverse transpose, so the inverse
  // action is the transpose itself.
  PolyMatrix composite = h.map() * f.matrix.transpose();
  return TorsionIsometry(std::move(composite), h.target(), h.target());
}

}  // namespace linkalg
