#include "linkalg/units.hpp"

#include <algorithm>
#include <set>

namespace linkalg {

bool is_odd_prime(long q) {
  if (q < 3 || q % 2 == 0) return false;
  for (long d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

bool is_unitary(const LaurentPoly& u) {
  if (!u.modulus()) throw std::invalid_argument("is_unitary: modulus required");
  return u * involute(u) == LaurentPoly::one(u.modulus());
}

UnitaryUnit orbit_unit(long n, long q) {
  if (!is_odd_prime(q))
    throw std::invalid_argument("orbit_unit: q must be an odd prime");
  LaurentPoly u = LaurentPoly::term(q - 1, n, 2 * q);
  u += LaurentPoly(Int(q), std::optional<long>(2 * q));
  return UnitaryUnit{u};
}

LaurentPoly orbit_unit_lift(long n, long q) {
  return lift_centered(orbit_unit(n, q).poly);
}

std::pair<LaurentPoly, LaurentPoly> crt_split(const LaurentPoly& u) {
  if (!u.modulus() || *u.modulus() % 2 != 0 || !is_odd_prime(*u.modulus() / 2))
    throw std::invalid_argument("crt_split: modulus must be 2q, q odd prime");
  const long q = *u.modulus() / 2;
  LaurentPoly lift = lift_plain(u);
  return {reduce_mod(lift, 2), reduce_mod(lift, q)};
}

LaurentPoly crt_combine(const LaurentPoly& a, const LaurentPoly& b, long q) {
  if (!is_odd_prime(q))
    throw std::invalid_argument("crt_combine: q must be an odd prime");
  if (a.modulus() != std::optional<long>(2) ||
      b.modulus() != std::optional<long>(q))
    throw std::invalid_argument("crt_combine: expected moduli (2, q)");
  if (!is_unitary(a) || !is_unitary(b))
    throw std::invalid_argument("crt_combine: inputs must be unitary units");
  LaurentPoly combined = LaurentPoly(Int(q), std::nullopt) * lift_plain(a) -
                         LaurentPoly(Int(q - 1), std::nullopt) * lift_plain(b);
  return reduce_mod(combined, 2 * q);
}

OrbitClass classify_unit(const LaurentPoly& u) {
  if (!u.modulus() || *u.modulus() % 2 != 0 || !is_odd_prime(*u.modulus() / 2))
    throw std::invalid_argument(
        "classify_unit: modulus must be 2q, q an odd prime");
  if (!is_unitary(u)) throw std::invalid_argument("classify_unit: not a unit");
  const long q = *u.modulus() / 2;
  auto [r2, rq] = crt_split(u);

  if (r2.term_count() != 1)
    throw std::domain_error("classify_unit: reduction mod 2 is not t^m");
  const long m_exp = r2.terms().begin()->first;

  if (rq.term_count() != 1)
    throw std::domain_error("classify_unit: reduction mod q is not +-t^n");
  const auto& [n_exp, cq] = *rq.terms().begin();
  if (cq != 1 && cq != q - 1)
    throw std::domain_error("classify_unit: reduction mod q is not +-t^n");

  return OrbitClass{n_exp - m_exp};
}

std::vector<UnitaryUnit> enumerate_unitary(long m, long span, long long cap) {
  if (m < 2) throw std::invalid_argument("enumerate_unitary: modulus >= 2");
  if (span < 0) throw std::invalid_argument("enumerate_unitary: span >= 0");
  const long width = 2 * span + 1;
  long long total = 1;
  for (long i = 0; i < width; ++i) {
    if (total > cap / m)
      throw EnumerationBudgetExceeded(
          "enumerate_unitary: candidate space exceeds the cap");
    total *= m;
  }

  std::vector<UnitaryUnit> found;
  std::vector<long> coeffs(static_cast<size_t>(width), 0);
  for (long long idx = 0; idx < total; ++idx) {
    LaurentPoly u = LaurentPoly::zero(m);
    for (long i = 0; i < width; ++i)
      u.add_term(i - span, coeffs[static_cast<size_t>(i)]);
    if (!u.is_zero() && is_unitary(u)) found.push_back(UnitaryUnit{u});
    // odometer step
    for (long i = 0; i < width; ++i) {
      if (++coeffs[static_cast<size_t>(i)] < m) break;
      coeffs[static_cast<size_t>(i)] = 0;
    }
  }
  return found;
}

namespace {

// Canonical representative of {+-t^j * u}: floor the support at exponent 0
// and take the lexicographically smaller of the two signs.
LaurentPoly orbit_canonical(const LaurentPoly& u) {
  LaurentPoly shifted = u.shifted(-u.span()->first);
  LaurentPoly negated = -shifted;
  return negated.terms() < shifted.terms() ? negated : shifted;
}

}  // namespace

OrbitSetDescription rank_one_orbit_set(const LaurentPoly& p, long span,
                                       long long cap) {
  if (p.modulus())
    throw std::invalid_argument("rank_one_orbit_set: integral p expected");
  if (p.is_zero()) throw std::invalid_argument("rank_one_orbit_set: p = 0");
  if (involute(p) != p)
    throw std::invalid_argument("rank_one_orbit_set: p must be symmetric");

  OrbitSetDescription d;
  if (unit_decompose(p)) {
    d.kind = OrbitSetDescription::Kind::Trivial;
    d.summary = "trivial: the form is unimodular and the cokernel vanishes";
    return d;
  }

  if (p.term_count() == 1 && p.span()->first == 0) {
    Int c = abs(p.coeff(0));
    if (c % 2 == 0 && c.fits_slong_p() && is_odd_prime(c.get_si() / 2)) {
      const long q = c.get_si() / 2;
      d.kind = OrbitSetDescription::Kind::InfiniteCyclic;
      d.q = q;
      d.generator = orbit_unit(1, q);
      d.summary =
          "isomorphic to Z: class n is represented by (q-1)t^n + q mod 2q";
      return d;
    }
    if (c.fits_slong_p()) {
      const long m = c.get_si();
      std::set<LaurentPoly::TermMap> seen;
      for (const UnitaryUnit& u : enumerate_unitary(m, span, cap)) {
        LaurentPoly canon = orbit_canonical(u.poly);
        if (seen.insert(canon.terms()).second)
          d.representatives.push_back(canon);
      }
      d.kind = OrbitSetDescription::Kind::BoundedEnumeration;
      d.summary = "unitary units mod " + std::to_string(m) +
                  " up to +-t^k, support bounded by " + std::to_string(span);
      return d;
    }
  }

  // Non-constant modulus: bounded search for unitary units of Z[t^{+-1}]/(p),
  // with coefficients bounded by the largest coefficient of p.
  long bound = 1;
  for (const auto& [e, c] : p.terms()) {
    Int a = abs(c);
    if (a.fits_slong_p()) bound = std::max(bound, a.get_si());
  }
  const long width = 2 * span + 1;
  long long total = 1;
  for (long i = 0; i < width; ++i) {
    if (total > cap / (2 * bound + 1))
      throw EnumerationBudgetExceeded("rank_one_orbit_set: bounded search cap");
    total *= 2 * bound + 1;
  }
  std::set<LaurentPoly::TermMap> seen;
  std::vector<long> coeffs(static_cast<size_t>(width), -bound);
  for (long long idx = 0; idx < total; ++idx) {
    LaurentPoly u;
    for (long i = 0; i < width; ++i)
      u.add_term(i - span, coeffs[static_cast<size_t>(i)]);
    if (!u.is_zero() && divides(p, u * involute(u) - LaurentPoly(1))) {
      LaurentPoly canon = orbit_canonical(u);
      if (seen.insert(canon.terms()).second) d.representatives.push_back(canon);
    }
    for (long i = 0; i < width; ++i) {
      if (++coeffs[static_cast<size_t>(i)] <= bound) break;
      coeffs[static_cast<size_t>(i)] = -bound;
    }
  }
  d.kind = OrbitSetDescription::Kind::BoundedEnumeration;
  d.summary =
      "bounded search for unitary units modulo a non-constant polynomial; "
      "representatives are reduced under +-t^k only";
  return d;
}

}  // namespace linkalg
