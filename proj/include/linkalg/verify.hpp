#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkalg/serialize.hpp"

namespace linkalg {

struct VerifyOptions {
  std::uint64_t seed = 1;
  long span = 2;                    // exponent span for the enumeration oracle
  long long candidate_cap = 10'000'000;
};

struct CheckResult {
  std::string name;
  std::string anchor;   // the algebraic fact being certified
  bool passed = false;
  std::string details;
};

/// Outcome of the full verification pipeline for one odd prime q.  The
/// orbit-set summary is only claimed when every check passed.
struct VerificationReport {
  long q = 0;
  VerifyOptions options;
  std::vector<CheckResult> checks;
  std::string orbit_set;      // "Z" on full pass
  std::string generator;      // printed unit representing class 1
  double elapsed_ms = 0.0;

  bool all_passed() const;
};

json report_to_json(const VerificationReport& report);

// Runs, in order: the homomorphism/injectivity grid for the canonical units,
// the quadratic-isometry grid, the enumeration surjectivity oracle, the
// square-roots-of-unity computation, the union evenness/signature grid, and
// the seeded word-algebra property batch.
VerificationReport run_verification(long q, const VerifyOptions& options = {});

struct DistinguishingCertificate {
  long q = 0;
  long n1 = 0, n2 = 0;
  long class1 = 0, class2 = 0;
  std::string rep1, rep2;
  bool distinct = false;
};

// Orbit classes of the canonical units for n1 and n2, with the +-t^k action
// already absorbed by the classification; distinct verdict iff the classes
// differ.
DistinguishingCertificate distinguish(long q, long n1, long n2);

json certificate_to_json(const DistinguishingCertificate& c);

// The presentation of the rank-one form (2q).
LinkingPresentation presentation_2q(long q);

// The self-isometry of the boundary of (2q) given by the canonical unit of
// orbit class n, lifted with least-absolute coefficients.
TorsionIsometry canonical_boundary_isometry(long q, long n);

// Union of (2q) with itself along the class-n boundary isometry, reported
// with evenness, determinant class and signature at t = 1.
json union_report(long q, long n);

// The mod-8 contrast case: multiplication by 3 preserves the boundary
// pairing of (8) but not its refinement, the corresponding union is not
// even, and Z/8 has four square roots of unity.
json counterexample_z8();

}  // namespace linkalg
