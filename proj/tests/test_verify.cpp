#include <doctest.h>

#include <nlohmann/json.hpp>

#include "linkalg/verify.hpp"

using namespace linkalg;

TEST_CASE("verification passes for small primes") {
  for (long q : {3L, 5L}) {
    VerificationReport report = run_verification(q);
    CHECK(report.all_passed());
    CHECK(report.orbit_set == "Z");
    CHECK(report.checks.size() == 6);
  }
  CHECK_THROWS_AS(run_verification(4), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(9), std::invalid_argument);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  VerifyOptions options;
  options.seed = 99;
  VerificationReport a = run_verification(3, options);
  VerificationReport b = run_verification(3, options);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].passed == b.checks[i].passed);
    CHECK(a.checks[i].details == b.checks[i].details);
  }
  json ja = report_to_json(a);
  CHECK(ja.at("seed").get<std::uint64_t>() == 99);
  CHECK(ja.at("all_passed").get<bool>());
  CHECK(ja.at("orbit_set") == "Z");
  CHECK(ja.at("generator") == "2t+3");
}

TEST_CASE("distinguishing certificates over the full grid") {
  for (long n1 = -5; n1 <= 5; ++n1)
    for (long n2 = -5; n2 <= 5; ++n2) {
      DistinguishingCertificate c = distinguish(3, n1, n2);
      CHECK(c.distinct == (n1 != n2));
      CHECK(c.class1 == n1);
      CHECK(c.class2 == n2);
    }
  DistinguishingCertificate far = distinguish(5, -3, 4);
  CHECK(far.distinct);
  json j = certificate_to_json(far);
  CHECK(j.at("verdict") == "distinct");
  CHECK_THROWS_AS(distinguish(15, 0, 1), std::invalid_argument);
}

TEST_CASE("union report, pinned n = 0 instance") {
  json j = union_report(3, 0);
  CHECK(j.at("h") == "-1");
  CHECK(j.at("even").get<bool>());
  CHECK(j.at("signature_at_1").get<long>() == 0);
  CHECK(j.at("det_class").at("sign").get<int>() == -1);
  const json& gram = j.at("gram").at("gram");
  CHECK(poly_from_json(gram.at(0).at(0)) == LaurentPoly(0));
  CHECK(poly_from_json(gram.at(0).at(1)) == LaurentPoly(1));
  CHECK(poly_from_json(gram.at(1).at(0)) == LaurentPoly(1));
  CHECK(poly_from_json(gram.at(1).at(1)) == LaurentPoly(-6));
}

TEST_CASE("mod-8 contrast report") {
  json j = counterexample_z8();
  CHECK(j.at("symmetric").get<bool>());
  CHECK_FALSE(j.at("quadratic").get<bool>());
  CHECK(j.at("mu_3") == "9/8");
  CHECK(j.at("mu_1") == "1/8");
  CHECK_FALSE(j.at("union_even").get<bool>());
  CHECK(j.at("square_roots_mod_8").size() == 4);
}
