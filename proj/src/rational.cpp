#include "linkalg/rational.hpp"

namespace linkalg {

namespace {

Int content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

LaurentPoly divide_coeffs(const LaurentPoly& p, const Int& g) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c / g);
  return r;
}

}  // namespace

RatValue::RatValue(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.modulus() || den_.modulus())
    throw std::invalid_argument("RatValue: integral ring only");
  if (den_.is_zero()) throw std::invalid_argument("RatValue: zero denominator");
  canonicalize();
}

void RatValue::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const long shift = -den_.span()->first;
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  if (den_.terms().rbegin()->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(content(num_), content(den_));
  if (g > 1) {
    num_ = divide_coeffs(num_, g);
    den_ = divide_coeffs(den_, g);
  }
}

RatValue operator+(const RatValue& a, const RatValue& b) {
  return RatValue(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatValue operator-(const RatValue& a, const RatValue& b) {
  return RatValue(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatValue operator*(const RatValue& a, const RatValue& b) {
  return RatValue(a.num_ * b.num_, a.den_ * b.den_);
}

RatValue operator-(const RatValue& a) { return RatValue(-a.num(), a.den()); }

RatValue involute(const RatValue& v) {
  return RatValue(involute(v.num()), involute(v.den()));
}

bool is_symmetric(const RatValue& v) {
  return v.num() * involute(v.den()) == involute(v.num()) * v.den();
}

std::optional<LaurentPoly> as_ring_element(const RatValue& v) {
  return exact_divide(v.num(), v.den());
}

std::string to_string(const RatValue& v) {
  if (v.den() == LaurentPoly(1)) return to_string(v.num());
  std::string n = to_string(v.num());
  if (v.num().term_count() > 1) n = "(" + n + ")";
  std::string d = to_string(v.den());
  if (v.den().term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

bool is_even_symmetric(const LaurentPoly& c) {
  if (c.modulus())
    throw std::invalid_argument("is_even_symmetric: integral ring only");
  if (involute(c) != c)
    throw std::invalid_argument("is_even_symmetric: input not symmetric");
  return c.coeff(0) % 2 == 0;
}

QClass::QClass(RatValue value, QGroup group)
    : value_(std::move(value)), group_(group) {
  switch (group_) {
    case QGroup::QtModZt:
      break;
    case QGroup::Q1:
      if (!is_symmetric(value_))
        throw std::invalid_argument("QClass: Q1 representative not symmetric");
      break;
    case QGroup::Q1upper: {
      // b - conj(b) must be integral; being antisymmetric it is then
      // automatically of the form a - conj(a).
      if (!as_ring_element(value_ - involute(value_)))
        throw std::invalid_argument(
            "QClass: Q1upper representative has non-integral b - conj(b)");
      break;
    }
  }
}

bool qclass_equal(const QClass& a, const QClass& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("qclass_equal: group mismatch");
  auto diff = as_ring_element(a.value() - b.value());
  if (!diff) return false;
  if (a.group() != QGroup::Q1) return true;
  // Difference of symmetric representatives is symmetric; it is in the
  // denominator subgroup {a + conj(a)} iff its constant term is even.
  return is_even_symmetric(*diff);
}

QClass to_upper(const QClass& q) {
  if (q.group() != QGroup::Q1)
    throw std::invalid_argument("to_upper: expected a Q1 class");
  return QClass(q.value(), QGroup::Q1upper);
}

std::string to_string(QGroup g) {
  switch (g) {
    case QGroup::QtModZt:
      return "QtModZt";
    case QGroup::Q1:
      return "Q1";
    case QGroup::Q1upper:
      return "Q1upper";
  }
  return "?";
}

}  // namespace linkalg
