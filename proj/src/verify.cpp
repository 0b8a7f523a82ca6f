#include "linkalg/verify.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "linkalg/words.hpp"

namespace linkalg {

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name},
                          {"anchor", c.anchor},
                          {"status", c.passed ? "pass" : "fail"},
                          {"details", c.details}});
  json j{{"q", report.q},
         {"seed", report.options.seed},
         {"span", report.options.span},
         {"checks", std::move(checks)},
         {"elapsed_ms", report.elapsed_ms},
         {"all_passed", report.all_passed()}};
  if (report.all_passed()) {
    j["orbit_set"] = report.orbit_set;
    j["generator"] = report.generator;
  }
  return j;
}

LinkingPresentation presentation_2q(long q) {
  PolyMatrix g(1, 1);
  g(0, 0) = LaurentPoly(2 * q);
  return LinkingPresentation(HermitianForm(g));
}

TorsionIsometry canonical_boundary_isometry(long q, long n) {
  LinkingPresentation p = presentation_2q(q);
  PolyMatrix m(1, 1);
  m(0, 0) = orbit_unit_lift(n, q);
  return TorsionIsometry(std::move(m), p, p);
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult check_unit_homomorphism(long q) {
  CheckResult r{"unit-homomorphism-grid",
                "orbit classification is additive on products of canonical "
                "units, and injective",
                true,
                ""};
  for (long n = -5; n <= 5 && r.passed; ++n)
    for (long m = -5; m <= 5; ++m) {
      LaurentPoly prod = orbit_unit(n, q).poly * orbit_unit(m, q).poly;
      if (classify_unit(prod).k != n + m) {
        r.passed = false;
        r.details = "product class mismatch at n=" + std::to_string(n) +
                    ", m=" + std::to_string(m);
        break;
      }
    }
  for (long n = -5; n <= 5 && r.passed; ++n) {
    if (classify_unit(orbit_unit(n, q).poly).k != n) {
      r.passed = false;
      r.details = "classification not a section at n=" + std::to_string(n);
    }
    if (n != 0 && orbit_unit(n, q).poly.term_count() == 1) {
      r.passed = false;
      r.details = "canonical unit degenerates to a monomial at n=" +
                  std::to_string(n);
    }
  }
  if (r.passed) r.details = "121 products and 11 sections checked";
  return r;
}

CheckResult check_quadratic_equals_symmetric(long q) {
  CheckResult r{"quadratic-isometry-grid",
                "every canonical unit preserves the quadratic refinement of "
                "the boundary of (2q)",
                true,
                ""};
  for (long n = -10; n <= 10; ++n) {
    TorsionIsometry h = canonical_boundary_isometry(q, n);
    if (!verify_linking_isometry(h, true)) {
      r.passed = false;
      r.details = "refinement not preserved at n=" + std::to_string(n);
      return r;
    }
  }
  r.details = "21 classes checked with exact arithmetic";
  return r;
}

CheckResult check_surjectivity(long q, long span, long long cap) {
  CheckResult r{"unit-enumeration-surjectivity",
                "every unitary unit mod 2q with bounded support is a "
                "canonical unit times +-t^j",
                true,
                ""};
  std::vector<UnitaryUnit> units;
  try {
    units = enumerate_unitary(2 * q, span, cap);
  } catch (const EnumerationBudgetExceeded& e) {
    r.passed = false;
    r.details = e.what();
    return r;
  }
  for (const UnitaryUnit& u : units) {
    long k = 0;
    try {
      k = classify_unit(u.poly).k;
    } catch (const std::exception& e) {
      r.passed = false;
      r.details = "classification failed: " + std::string(e.what());
      return r;
    }
    if (k < -2 * span || k > 2 * span) {
      r.passed = false;
      r.details = "class out of range: " + std::to_string(k);
      return r;
    }
    // Residual after dividing by the canonical representative (the inverse
    // of a unitary unit is its involution) must be +-t^j.
    LaurentPoly residual = u.poly * involute(orbit_unit(k, q).poly);
    bool monomial_unit =
        residual.term_count() == 1 &&
        (residual.terms().begin()->second == 1 ||
         residual.terms().begin()->second == 2 * q - 1);
    if (!monomial_unit) {
      r.passed = false;
      r.details = "residual is not +-t^j for a unit of class " +
                  std::to_string(k);
      return r;
    }
  }
  r.details = std::to_string(units.size()) +
              " unitary units enumerated and factored";
  return r;
}

CheckResult check_square_roots(long q) {
  CheckResult r{"square-roots-of-unity",
                "the only square roots of 1 in Z/2q are +-1",
                true,
                ""};
  std::set<long> expected{1, 2 * q - 1};
  std::set<long> actual = square_roots_of_unity(2 * q);
  if (actual != expected) {
    r.passed = false;
    r.details = "unexpected solution set of size " +
                std::to_string(actual.size());
  } else {
    r.details = "solution set is {1, " + std::to_string(2 * q - 1) + "}";
  }
  return r;
}

CheckResult check_union_grid(long q) {
  CheckResult r{"union-evenness-grid",
                "the union of (2q) with itself along any canonical boundary "
                "isometry is even, unimodular, and signature 0 at t=1",
                true,
                ""};
  for (long n = -3; n <= 3; ++n) {
    TorsionIsometry h = canonical_boundary_isometry(q, n);
    HermitianForm glued = union_gram(h);
    if (!is_even(glued)) {
      r.passed = false;
      r.details = "union not even at n=" + std::to_string(n);
      return r;
    }
    if (!unit_decompose(determinant(glued.gram()))) {
      r.passed = false;
      r.details = "union determinant not a unit at n=" + std::to_string(n);
      return r;
    }
    if (signature_at_one(glued) != 0) {
      r.passed = false;
      r.details = "nonzero signature at n=" + std::to_string(n);
      return r;
    }
  }
  r.details = "7 unions glued and checked";
  return r;
}

CheckResult check_word_algebra(long q, std::uint64_t seed) {
  CheckResult r{"word-algebra-batch",
                "the kernel abelianization scan inverts the canonical "
                "embedding and is conjugation covariant",
                true,
                ""};
  const long m = 2 * q;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> exp_dist(-8, 8);
  std::uniform_int_distribution<long> coeff_dist(0, m - 1);
  std::uniform_int_distribution<long> count_dist(0, 6);

  auto random_poly = [&] {
    LaurentPoly p = LaurentPoly::zero(m);
    long terms = count_dist(rng);
    for (long i = 0; i < terms; ++i) p.add_term(exp_dist(rng), coeff_dist(rng));
    return p;
  };
  auto random_kernel_word = [&] {
    FreeProductWord w(m);
    long factors = count_dist(rng);
    for (long i = 0; i < factors; ++i) {
      long shift = exp_dist(rng);
      long a = coeff_dist(rng);
      w *= FreeProductWord::t_power(m, shift) * FreeProductWord::x_power(m, a) *
           FreeProductWord::t_power(m, -shift);
    }
    return w;
  };

  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly();
    if (word_to_poly(word_from_poly(p)) != p) {
      r.passed = false;
      r.details = "scan does not invert the embedding";
      return r;
    }
  }
  for (int i = 0; i < 200; ++i) {
    FreeProductWord w = random_kernel_word();
    FreeProductWord g =
        FreeProductWord::t_power(m, exp_dist(rng)) *
        FreeProductWord::x_power(m, coeff_dist(rng));
    LaurentPoly shifted =
        word_to_poly(w).shifted(t_exponent_sum(g));
    if (conjugation_action(g, w) != shifted) {
      r.passed = false;
      r.details = "conjugation does not act by a t-shift";
      return r;
    }
    FreeProductWord w2 = random_kernel_word();
    FreeProductWord comm = w * w2 * inverse(w) * inverse(w2);
    if (!word_to_poly(comm).is_zero()) {
      r.passed = false;
      r.details = "commutator of kernel words has nonzero class";
      return r;
    }
  }
  r.details = "200 scans, 200 conjugations, 200 commutators";
  return r;
}

}  // namespace

VerificationReport run_verification(long q, const VerifyOptions& options) {
  if (!is_odd_prime(q))
    throw std::invalid_argument("verify: q must be an odd prime");
  VerificationReport report;
  report.q = q;
  report.options = options;
  const auto start = Clock::now();

  report.checks.push_back(check_unit_homomorphism(q));
  report.checks.push_back(check_quadratic_equals_symmetric(q));
  report.checks.push_back(
      check_surjectivity(q, options.span, options.candidate_cap));
  report.checks.push_back(check_square_roots(q));
  report.checks.push_back(check_union_grid(q));
  report.checks.push_back(check_word_algebra(q, options.seed));

  if (report.all_passed()) {
    OrbitSetDescription orbit = rank_one_orbit_set(LaurentPoly(2 * q));
    report.orbit_set =
        orbit.kind == OrbitSetDescription::Kind::InfiniteCyclic ? "Z" : "?";
    report.generator = to_string(lift_plain(orbit.generator->poly));
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

DistinguishingCertificate distinguish(long q, long n1, long n2) {
  if (!is_odd_prime(q))
    throw std::invalid_argument("distinguish: q must be an odd prime");
  DistinguishingCertificate c;
  c.q = q;
  c.n1 = n1;
  c.n2 = n2;
  c.class1 = classify_unit(orbit_unit(n1, q).poly).k;
  c.class2 = classify_unit(orbit_unit(n2, q).poly).k;
  c.rep1 = to_string(lift_plain(orbit_unit(n1, q).poly));
  c.rep2 = to_string(lift_plain(orbit_unit(n2, q).poly));
  c.distinct = (c.class1 != c.class2);
  return c;
}

json certificate_to_json(const DistinguishingCertificate& c) {
  return json{{"q", c.q},
              {"n1", c.n1},
              {"n2", c.n2},
              {"b_classes", json::array({c.class1, c.class2})},
              {"representatives", json::array({c.rep1, c.rep2})},
              {"verdict", c.distinct ? "distinct" : "equivalent"}};
}

json union_report(long q, long n) {
  if (!is_odd_prime(q))
    throw std::invalid_argument("union: q must be an odd prime");
  TorsionIsometry h = canonical_boundary_isometry(q, n);
  HermitianForm glued = union_gram(h);
  LaurentPoly det = determinant(glued.gram());
  return json{{"q", q},
              {"n", n},
              {"h", to_string(h.map()(0, 0))},
              {"basis", union_basis_to_json(union_basis(h))},
              {"gram", hermitian_to_json(glued)},
              {"even", is_even(glued)},
              {"det_class", det_class_to_json(det)},
              {"signature_at_1", signature_at_one(glued)}};
}

json counterexample_z8() {
  PolyMatrix g(1, 1);
  g(0, 0) = LaurentPoly(8);
  LinkingPresentation p{HermitianForm(g)};
  PolyMatrix three(1, 1);
  three(0, 0) = LaurentPoly(3);
  TorsionIsometry h(three, p, p);

  PolyVector v1(1), v3(1);
  v1(0) = LaurentPoly(1);
  v3(0) = LaurentPoly(3);

  HermitianForm glued = union_gram(h);
  std::set<long> roots = square_roots_of_unity(8);
  return json{
      {"symmetric", verify_linking_isometry(h, false)},
      {"quadratic", verify_linking_isometry(h, true)},
      {"mu_3", to_string(boundary_refinement(p, v3).value())},
      {"mu_1", to_string(boundary_refinement(p, v1).value())},
      {"union_gram", hermitian_to_json(glued)},
      {"union_even", is_even(glued)},
      {"square_roots_mod_8",
       json(std::vector<long>(roots.begin(), roots.end()))}};
}

}  // namespace linkalg
