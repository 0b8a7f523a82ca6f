#include <doctest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "linkalg/serialize.hpp"
#include "linkalg/verify.hpp"

using namespace linkalg;
using linkalg::testing::Rng;
using linkalg::testing::random_even_form;
using linkalg::testing::random_poly;

TEST_CASE("polynomial JSON encoding is pinned and bit-exact") {
  LaurentPoly p;
  p.add_term(-1, 3);
  p.add_term(2, -7);
  json j = poly_to_json(p);
  CHECK(j.dump() == R"({"mod":null,"terms":[[-1,"3"],[2,"-7"]]})");
  CHECK(poly_from_json(j) == p);

  LaurentPoly u = reduce_mod(p, 5);
  json ju = poly_to_json(u);
  CHECK(ju.at("mod").get<long>() == 5);
  CHECK(poly_from_json(ju) == u);
}

TEST_CASE("round-trips on random values") {
  Rng rng(137);
  for (int i = 0; i < 80; ++i) {
    LaurentPoly p = random_poly(rng, 6, 50);
    CHECK(poly_from_json(poly_to_json(p)) == p);

    HermitianForm g = random_even_form(rng, 2, 1, 3);
    HermitianForm back = hermitian_from_json(hermitian_to_json(g));
    CHECK(matrix_equal(back.gram(), g.gram()));
  }
  // A huge coefficient survives the decimal-string encoding.
  LaurentPoly big = LaurentPoly::term(Int("123456789012345678901234567890"), 4);
  CHECK(poly_from_json(poly_to_json(big)) == big);
}

TEST_CASE("qclass serialization carries the group tag") {
  QClass q(RatValue(LaurentPoly(1), LaurentPoly(6)), QGroup::Q1);
  json j = qclass_to_json(q);
  CHECK(j.at("group") == "Q1");
  QClass back = qclass_from_json(j);
  CHECK(back.group() == QGroup::Q1);
  CHECK(qclass_equal(q, back));
}

TEST_CASE("presentation and isometry encodings") {
  LinkingPresentation p = presentation_2q(3);
  json jp = presentation_to_json(p);
  LinkingPresentation back = presentation_from_json(jp);
  CHECK(back.det() == p.det());

  TorsionIsometry h = canonical_boundary_isometry(3, 1);
  json jh = isometry_to_json(h, true);
  CHECK(jh.at("quadratic").get<bool>());
  CHECK(matrix_from_json(jh.at("matrix"))(0, 0) == h.map()(0, 0));
}

TEST_CASE("determinant class encoding") {
  CHECK(det_class_to_json(LaurentPoly(-1)) ==
        json({{"sign", -1}, {"exp", 0}}));
  CHECK(det_class_to_json(LaurentPoly::term(1, 3)) ==
        json({{"sign", 1}, {"exp", 3}}));
  CHECK(det_class_to_json(LaurentPoly(6)) == json("nonunit"));
}
