#pragma once

#include <set>
#include <vector>

#include "linkalg/laurent.hpp"

namespace linkalg {

/// Reduced word in the free product (Z/m) * Z, with torsion generator x of
/// order m and free generator t.  Reduced means: no zero exponents, no
/// adjacent letters on the same generator, and x-exponents in [1, m).
class FreeProductWord {
public:
  enum class Gen : unsigned char { X, T };

  struct Letter {
    Gen gen;
    long exp;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  explicit FreeProductWord(long m);

  static FreeProductWord identity(long m) { return FreeProductWord(m); }
  static FreeProductWord x_power(long m, long a);
  static FreeProductWord t_power(long m, long k);

  long order_of_x() const { return m_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  friend FreeProductWord operator*(const FreeProductWord& a,
                                   const FreeProductWord& b);
  FreeProductWord& operator*=(const FreeProductWord& b) {
    return *this = *this * b;
  }

  friend bool operator==(const FreeProductWord& a, const FreeProductWord& b) {
    return a.m_ == b.m_ && a.letters_ == b.letters_;
  }

private:
  // Appends one letter, folding into the reduced form.
  void push(Gen gen, long exp);

  long m_;
  std::vector<Letter> letters_;
};

FreeProductWord inverse(const FreeProductWord& w);

// Exponent sum of t: the projection onto the free factor of the
// abelianization of the free part.
long t_exponent_sum(const FreeProductWord& w);

// The canonical kernel word of a polynomial sum_i a_i t^i over Z/m: the
// product of t^i x^{a_i} t^{-i} in ascending exponent order.
FreeProductWord word_from_poly(const LaurentPoly& p);

// Class of a kernel word in the abelianization of ker(t-exponent-sum),
// identified with (Z/m)[t^{+-1}]: scan left to right, tracking the running
// t-exponent e, and credit each x^a with a * t^e.  Rejects words with
// nonzero t-exponent sum, where the identification is meaningless.
LaurentPoly word_to_poly(const FreeProductWord& w);

// word_to_poly of the conjugate g w g^{-1}; equals t^{t_exponent_sum(g)}
// times word_to_poly(w).
LaurentPoly conjugation_action(const FreeProductWord& g,
                               const FreeProductWord& w);

// Additive order of the class of a kernel word: lcm of the orders of the
// coefficients in Z/m.  Always finite.
long order_in_kernel_ab(const FreeProductWord& w);

// Solutions of a^2 = 1 in Z/m; exactly {1, m-1} when m = 2q for an odd
// prime q.
std::set<long> square_roots_of_unity(long m);

// Word literal syntax: whitespace-separated letters with caret exponents,
// e.g. "x^2 t^-1 x t^3"; the identity prints as "1".
FreeProductWord parse_word(const std::string& text, long m);
std::string to_string(const FreeProductWord& w);

}  // namespace linkalg
