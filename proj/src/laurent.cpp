#include "linkalg/laurent.hpp"

#include <sstream>
#include <vector>

namespace linkalg {

LaurentPoly involute(const LaurentPoly& p) {
  LaurentPoly r = LaurentPoly::zero(p.modulus());
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

namespace {

// Dense coefficient vector of p * t^{-lowest}, as exact rationals.
std::vector<mpq_class> dense_from_floor(const LaurentPoly& p) {
  auto sp = *p.span();
  std::vector<mpq_class> v(static_cast<size_t>(sp.second - sp.first) + 1, 0);
  for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e - sp.first)] = c;
  return v;
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p,
                                        const LaurentPoly& d) {
  if (p.modulus() || d.modulus())
    throw std::invalid_argument("exact_divide: integral ring only");
  if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  if (p.is_zero()) return LaurentPoly{};

  // Shift both so the lowest exponent is 0; the quotient, when it exists,
  // is an ordinary polynomial times the shift difference.
  const long p_low = p.span()->first;
  const long d_low = d.span()->first;
  std::vector<mpq_class> num = dense_from_floor(p);
  const std::vector<mpq_class> den = dense_from_floor(d);
  if (num.size() < den.size()) return std::nullopt;

  // Long division by the leading coefficient, over Q.
  const size_t qdeg = num.size() - den.size();
  std::vector<mpq_class> quot(qdeg + 1, 0);
  const mpq_class& lead = den.back();
  for (size_t k = qdeg + 1; k-- > 0;) {
    mpq_class q = num[k + den.size() - 1] / lead;
    quot[k] = q;
    if (q != 0)
      for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
  }
  for (const mpq_class& r : num)
    if (r != 0) return std::nullopt;

  LaurentPoly h;
  for (size_t k = 0; k <= qdeg; ++k) {
    if (quot[k] == 0) continue;
    if (quot[k].get_den() != 1) return std::nullopt;  // non-integral quotient
    h.add_term(static_cast<long>(k) + p_low - d_low, quot[k].get_num());
  }
  return h;
}

bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  return exact_divide(p, d).has_value();
}

std::optional<UnitDecomposition> unit_decompose(const LaurentPoly& p) {
  if (p.modulus())
    throw std::invalid_argument("unit_decompose: integral ring only");
  if (p.term_count() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  if (c == 1) return UnitDecomposition{+1, e};
  if (c == -1) return UnitDecomposition{-1, e};
  return std::nullopt;
}

LaurentPoly reduce_mod(const LaurentPoly& p, long m) {
  if (p.modulus())
    throw std::invalid_argument("reduce_mod: input already has a modulus");
  if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
  LaurentPoly r = LaurentPoly::zero(m);
  for (const auto& [e, c] : p.terms()) r.add_term(e, c);
  return r;
}

LaurentPoly lift_plain(const LaurentPoly& p) {
  if (!p.modulus()) throw std::invalid_argument("lift_plain: no modulus");
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c);
  return r;
}

LaurentPoly lift_centered(const LaurentPoly& p) {
  if (!p.modulus()) throw std::invalid_argument("lift_centered: no modulus");
  const long m = *p.modulus();
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    Int lifted = c;
    if (2 * lifted > m) lifted -= m;  // least absolute residue, ties upward
    r.add_term(e, lifted);
  }
  return r;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent first reads like handwritten algebra.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (abs_c != 1 || e == 0) os << abs_c.get_str();
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace linkalg
