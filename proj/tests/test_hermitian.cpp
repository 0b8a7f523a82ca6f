#include <doctest.h>

#include "support.hpp"

using namespace linkalg;
using linkalg::testing::Rng;
using linkalg::testing::random_even_form;
using linkalg::testing::signature_oracle;

namespace {

PolyMatrix mat1(LaurentPoly a) {
  PolyMatrix m(1, 1);
  m(0, 0) = std::move(a);
  return m;
}

PolyMatrix mat2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
  PolyMatrix m(2, 2);
  m(0, 0) = std::move(a);
  m(0, 1) = std::move(b);
  m(1, 0) = std::move(c);
  m(1, 1) = std::move(d);
  return m;
}

LaurentPoly t_pow(long k, long coeff = 1) {
  return LaurentPoly::term(coeff, k);
}

}  // namespace

TEST_CASE("hermitian and nondegenerate predicates") {
  CHECK(is_hermitian(mat1(LaurentPoly(6))));
  CHECK(is_nondegenerate(HermitianForm(mat1(LaurentPoly(6)))));

  CHECK(is_hermitian(mat2(0, 1, 1, 0)));
  CHECK(is_nondegenerate(HermitianForm(mat2(0, 1, 1, 0))));

  CHECK_FALSE(is_hermitian(mat2(0, t_pow(1), t_pow(1), 0)));
  CHECK(is_hermitian(mat2(0, t_pow(1), t_pow(-1), 0)));

  CHECK_THROWS_AS(HermitianForm(mat2(0, t_pow(1), t_pow(1), 0)),
                  std::invalid_argument);
}

TEST_CASE("evenness") {
  CHECK(is_even(HermitianForm(mat1(LaurentPoly(6)))));
  CHECK_FALSE(is_even(HermitianForm(mat1(LaurentPoly(1)))));

  // Union Gram at q = 3, n = 1.
  LaurentPoly a;
  a.add_term(0, -2);
  a.add_term(1, -1);
  a.add_term(-1, -1);
  LaurentPoly b;
  b.add_term(-1, -2);
  b.add_term(0, -3);
  CHECK(is_even(HermitianForm(mat2(a, b, involute(b), LaurentPoly(-6)))));
}

TEST_CASE("isometry checks") {
  HermitianForm six(mat1(LaurentPoly(6)));
  CHECK(is_isometry(FormIsometry{mat1(t_pow(2, -1))}, six, six));
  CHECK_FALSE(is_isometry(FormIsometry{mat1(LaurentPoly(3))}, six, six));
  HermitianForm hyp(mat2(0, 1, 1, 0));
  CHECK(is_isometry(FormIsometry{poly_identity(2)}, hyp, hyp));
  CHECK_THROWS_AS(is_isometry(FormIsometry{poly_identity(2)}, six, six),
                  std::invalid_argument);
}

TEST_CASE("rank-one self-isometries are exactly the ring units") {
  HermitianForm six(mat1(LaurentPoly(6)));
  Rng rng(41);
  for (int i = 0; i < 120; ++i) {
    LaurentPoly f = linkalg::testing::random_poly(rng, 2, 2);
    bool isom = is_isometry(FormIsometry{mat1(f)}, six, six);
    CHECK(isom == unit_decompose(f).has_value());
  }
}

TEST_CASE("isometries compose") {
  Rng rng(43);
  for (int i = 0; i < 25; ++i) {
    HermitianForm g0 = random_even_form(rng, 2, 1, 2);
    PolyMatrix f = linkalg::testing::random_unimodular(rng, 2);
    PolyMatrix e = linkalg::testing::random_unimodular(rng, 2);
    // g1 and g2 defined so that f: g0 ~ g1 and e: g1 ~ g2.
    // From F^T G1 conj(F) = G0 one solves G1 by moving the unimodular
    // factors across, staying inside the ring.
    auto transport = [](const HermitianForm& g, const PolyMatrix& u) {
      LaurentPoly det = determinant(u);
      auto unit = unit_decompose(det);
      REQUIRE(unit);
      LaurentPoly inv_det = LaurentPoly::term(unit->sign, -unit->exponent);
      PolyMatrix u_inv = adjugate(u);
      for (Eigen::Index r = 0; r < u_inv.rows(); ++r)
        for (Eigen::Index c = 0; c < u_inv.cols(); ++c)
          u_inv(r, c) *= inv_det;
      PolyMatrix res =
          u_inv.transpose() * g.gram() * involute_entries(u_inv);
      return HermitianForm(res);
    };
    HermitianForm g1 = transport(g0, f);
    HermitianForm g2 = transport(g1, e);
    REQUIRE(is_isometry(FormIsometry{f}, g0, g1));
    REQUIRE(is_isometry(FormIsometry{e}, g1, g2));
    CHECK(is_isometry(FormIsometry{e * f}, g0, g2));
  }
}

TEST_CASE("hyperbolic stabilization") {
  HermitianForm six(mat1(LaurentPoly(6)));
  HermitianForm stab = stabilize_hyperbolic(six);
  CHECK(stab.rank() == 3);
  CHECK(stab.gram()(0, 0) == LaurentPoly(6));
  CHECK(stab.gram()(1, 2) == LaurentPoly(1));
  CHECK(stab.gram()(2, 1) == LaurentPoly(1));
  CHECK(stab.gram()(1, 1) == LaurentPoly(0));

  HermitianForm from_empty = stabilize_hyperbolic(HermitianForm{});
  CHECK(matrix_equal(from_empty.gram(), mat2(0, 1, 1, 0)));

  HermitianForm twice = stabilize_hyperbolic(stab);
  CHECK(twice.rank() == 5);
  CHECK(twice.gram()(3, 4) == LaurentPoly(1));

  Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    HermitianForm g = random_even_form(rng, 2, 1, 3);
    CHECK(is_even(stabilize_hyperbolic(g)));
  }
}

TEST_CASE("signature at t = 1, pinned values") {
  CHECK(signature_at_one(HermitianForm(mat1(LaurentPoly(6)))) == 1);
  CHECK(signature_at_one(HermitianForm(mat2(0, 1, 1, 0))) == 0);
  CHECK(signature_at_one(HermitianForm(mat2(-4, -5, -5, -6))) == 0);
  CHECK_THROWS_AS(signature_at_one(HermitianForm(mat2(1, 1, 1, 1))),
                  std::domain_error);
  // Degenerate over the ring at t = 1 but fine elsewhere:
  LaurentPoly one_minus_t;
  one_minus_t.add_term(0, 1);
  one_minus_t.add_term(1, -1);
  CHECK_THROWS_AS(signature_at_one(HermitianForm(
                      mat1(one_minus_t + involute(one_minus_t)))),
                  std::domain_error);
}

TEST_CASE("fraction-free signature agrees with rational diagonalization") {
  Rng rng(53);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<int> dim(1, 6);
  int checked = 0;
  while (checked < 80) {
    const Eigen::Index n = dim(rng);
    IntMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) {
        a(i, j) = entry(rng);
        a(j, i) = a(i, j);
      }
    try {
      long expected = signature_oracle(a);
      CHECK(signature_of_integer_symmetric(a) == expected);
      ++checked;
    } catch (const std::domain_error&) {
      // singular draw; skip
    }
  }
}

TEST_CASE("signature of g + (-g) vanishes") {
  Rng rng(59);
  for (int i = 0; i < 20; ++i) {
    HermitianForm g = random_even_form(rng, 3, 1, 2, true);
    const Eigen::Index n = g.rank();
    PolyMatrix block(2 * n, 2 * n);
    for (Eigen::Index r = 0; r < 2 * n; ++r)
      for (Eigen::Index c = 0; c < 2 * n; ++c) block(r, c) = LaurentPoly(0);
    block.topLeftCorner(n, n) = g.gram();
    block.bottomRightCorner(n, n) = -g.gram();
    CHECK(signature_at_one(HermitianForm(block)) == 0);
  }
}
