#pragma once

#include <vector>

#include "linkalg/laurent.hpp"

namespace linkalg {

/// Unitary unit of (Z/m)[t^{+-1}]: an element u with u * involute(u) = 1.
struct UnitaryUnit {
  LaurentPoly poly;
};

/// Coset of the canonical unit (q-1)t^k + q in
/// U((Z/2q)[t^{+-1}]) / U(Z[t^{+-1}]).
struct OrbitClass {
  long k;
};

bool is_odd_prime(long q);

bool is_unitary(const LaurentPoly& u);

// The canonical unitary unit (q-1)t^n + q mod 2q representing orbit class n.
// (CLI name: units theta.)
UnitaryUnit orbit_unit(long n, long q);

// Integer lift of orbit_unit with least-absolute coefficients; the n = 0
// representative is then the plain unit -1.
LaurentPoly orbit_unit_lift(long n, long q);

// Mutually inverse group isomorphisms between
// U((Z/2)[t^{+-1}]) x U((Z/q)[t^{+-1}]) and U((Z/2q)[t^{+-1}]),
// (a, b) -> q*a - (q-1)*b and u -> (u mod 2, u mod q).
std::pair<LaurentPoly, LaurentPoly> crt_split(const LaurentPoly& u);
LaurentPoly crt_combine(const LaurentPoly& a, const LaurentPoly& b, long q);

// Orbit class of a unitary unit mod 2q: reduce mod 2 to t^m and mod q to
// +-t^n, and return n - m.  Total on unitary units; invariant under
// multiplication by +-t^j.
OrbitClass classify_unit(const LaurentPoly& u);

struct EnumerationBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All unitary units of (Z/m)[t^{+-1}] supported on exponents [-span, span],
// by exhaustive enumeration of the m^(2*span+1) candidates.  Fails loudly
// when the candidate space exceeds the cap.
std::vector<UnitaryUnit> enumerate_unitary(long m, long span,
                                           long long cap = 10'000'000);

/// Answer shape for the rank-one orbit set Aut(boundary)/Aut(form) of a
/// symmetric polynomial p, which is U(Z[t^{+-1}]/p) / U(Z[t^{+-1}]).
struct OrbitSetDescription {
  enum class Kind {
    Trivial,             // p is a unit: the cokernel vanishes
    InfiniteCyclic,      // p = 2q: classified by Z via the canonical units
    BoundedEnumeration,  // anything else: representatives up to a bound only
  };
  Kind kind;
  std::string summary;
  long q = 0;                              // set for InfiniteCyclic
  std::optional<UnitaryUnit> generator;    // set for InfiniteCyclic
  std::vector<LaurentPoly> representatives;  // set for BoundedEnumeration
};

OrbitSetDescription rank_one_orbit_set(const LaurentPoly& p, long span = 2,
                                       long long cap = 10'000'000);

}  // namespace linkalg
