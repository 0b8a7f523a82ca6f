#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace linkalg {

using Int = mpz_class;

/// Sparse Laurent polynomial over Z or over Z/m (m >= 2), with exact
/// arbitrary-precision coefficients.  The zero polynomial has an empty term
/// map; when a modulus is present every stored coefficient lies in [0, m).
class LaurentPoly {
public:
  using TermMap = std::map<long, Int>;

  LaurentPoly() = default;

  // Constant polynomial.  Implicit on purpose: matrices of polynomials are
  // routinely filled from integer literals.
  LaurentPoly(long c) { set(0, Int(c)); }
  LaurentPoly(const Int& c) { set(0, c); }

  LaurentPoly(const Int& c, std::optional<long> mod) : modulus_(mod) {
    check_modulus();
    set(0, c);
  }

  static LaurentPoly term(const Int& coeff, long exp,
                          std::optional<long> mod = std::nullopt) {
    LaurentPoly p;
    p.modulus_ = mod;
    p.check_modulus();
    p.set(exp, coeff);
    return p;
  }

  static LaurentPoly zero(std::optional<long> mod = std::nullopt) {
    LaurentPoly p;
    p.modulus_ = mod;
    p.check_modulus();
    return p;
  }

  static LaurentPoly one(std::optional<long> mod = std::nullopt) {
    return term(1, 0, mod);
  }

  const TermMap& terms() const { return terms_; }
  std::optional<long> modulus() const { return modulus_; }
  bool is_zero() const { return terms_.empty(); }

  Int coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  // Inclusive exponent span; nullopt for the zero polynomial.
  std::optional<std::pair<long, long>> span() const {
    if (terms_.empty()) return std::nullopt;
    return std::make_pair(terms_.begin()->first, terms_.rbegin()->first);
  }

  long term_count() const { return static_cast<long>(terms_.size()); }

  // Adds coeff * t^exp, keeping the canonical form.
  void add_term(long exp, const Int& coeff) {
    set(exp, this->coeff(exp) + coeff);
  }

  LaurentPoly shifted(long k) const {  // multiplication by t^k
    LaurentPoly r;
    r.modulus_ = modulus_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    if (modulus_) s = mod_value(s, *modulus_);
    return s;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r.require_same_modulus(b);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r.require_same_modulus(b);
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = LaurentPoly::zero(a.modulus_);
    for (const auto& [e, c] : a.terms_) r.set(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_modulus(b);
    LaurentPoly r = LaurentPoly::zero(a.modulus_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  static Int mod_value(const Int& c, long m) {
    Int r = c % m;
    if (r < 0) r += m;
    return r;
  }

private:
  void check_modulus() const {
    if (modulus_ && *modulus_ < 2)
      throw std::invalid_argument("LaurentPoly: modulus must be >= 2");
  }

  void require_same_modulus(const LaurentPoly& other) const {
    if (modulus_ != other.modulus_)
      throw std::invalid_argument("LaurentPoly: modulus mismatch");
  }

  // Canonicalizing write of a single coefficient.
  void set(long exp, Int c) {
    if (modulus_) c = mod_value(c, *modulus_);
    if (c == 0)
      terms_.erase(exp);
    else
      terms_[exp] = std::move(c);
  }

  TermMap terms_;
  std::optional<long> modulus_;
};

struct UnitDecomposition {
  int sign;       // +1 or -1
  long exponent;  // k in sign * t^k
};

// The ring involution induced by t -> 1/t.
LaurentPoly involute(const LaurentPoly& p);

// Exact quotient p / d in Z[t^{+-1}], or nullopt when d does not divide p.
// Integral ring only (no modulus); d must be nonzero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p,
                                        const LaurentPoly& d);

bool divides(const LaurentPoly& d, const LaurentPoly& p);

// Recognizes the units +-t^k of Z[t^{+-1}].
std::optional<UnitDecomposition> unit_decompose(const LaurentPoly& p);

// Coefficientwise reduction Z[t^{+-1}] -> (Z/m)[t^{+-1}].
LaurentPoly reduce_mod(const LaurentPoly& p, long m);

// Lift of a mod-m polynomial to Z with coefficients in [0, m).
LaurentPoly lift_plain(const LaurentPoly& p);

// Lift with least-absolute-value coefficients, ties resolved upward.
LaurentPoly lift_centered(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p);

}  // namespace linkalg
