#pragma once

#include "linkalg/laurent.hpp"

namespace linkalg {

/// Fraction num/den of integral Laurent polynomials, den != 0.  Kept in a
/// canonical form (coefficient content 1, den floored at exponent 0 with
/// positive leading coefficient) so printing is deterministic; equality is
/// nevertheless decided by cross-multiplication.
class RatValue {
public:
  RatValue() : num_(0), den_(1) {}
  RatValue(LaurentPoly num, LaurentPoly den);
  RatValue(long c) : num_(c), den_(1) {}

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatValue operator+(const RatValue& a, const RatValue& b);
  friend RatValue operator-(const RatValue& a, const RatValue& b);
  friend RatValue operator*(const RatValue& a, const RatValue& b);
  friend RatValue operator-(const RatValue& a);

  friend bool operator==(const RatValue& a, const RatValue& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }
  friend bool operator!=(const RatValue& a, const RatValue& b) {
    return !(a == b);
  }

private:
  void canonicalize();

  LaurentPoly num_, den_;
};

RatValue involute(const RatValue& v);
bool is_symmetric(const RatValue& v);

// The fraction as an element of Z[t^{+-1}], when the denominator divides.
std::optional<LaurentPoly> as_ring_element(const RatValue& v);

std::string to_string(const RatValue& v);

// Decides whether a symmetric integral Laurent polynomial is of the form
// a + involute(a).  A symmetric c splits as c_0 + sum_{k>0} c_k (t^k + t^-k),
// and every non-constant part is already of that form, so only the parity of
// the constant coefficient obstructs.
bool is_even_symmetric(const LaurentPoly& c);

enum class QGroup { QtModZt, Q1, Q1upper };

/// A class in one of the quotient groups used as value groups of linking
/// forms:
///   QtModZt  -- Q(t) / Z[t^{+-1}]
///   Q1       -- {b = conj(b)} / {a + conj(a)}
///   Q1upper  -- {b - conj(b) in Z[t^{+-1}]} / Z[t^{+-1}]
/// Construction checks membership of the representative in the numerator
/// subgroup.
class QClass {
public:
  QClass(RatValue value, QGroup group);

  const RatValue& value() const { return value_; }
  QGroup group() const { return group_; }

  friend QClass operator-(const QClass& q) {
    return QClass(-q.value_, q.group_);
  }

private:
  RatValue value_;
  QGroup group_;
};

bool qclass_equal(const QClass& a, const QClass& b);

// The quotient map Q1 -> Q1upper, forgetting the parity constraint.
QClass to_upper(const QClass& q);

std::string to_string(QGroup g);

}  // namespace linkalg
