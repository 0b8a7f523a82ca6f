#include "linkalg/words.hpp"

#include <numeric>
#include <sstream>

namespace linkalg {

FreeProductWord::FreeProductWord(long m) : m_(m) {
  if (m < 2)
    throw std::invalid_argument("FreeProductWord: order of x must be >= 2");
}

FreeProductWord FreeProductWord::x_power(long m, long a) {
  FreeProductWord w(m);
  w.push(Gen::X, a);
  return w;
}

FreeProductWord FreeProductWord::t_power(long m, long k) {
  FreeProductWord w(m);
  w.push(Gen::T, k);
  return w;
}

void FreeProductWord::push(Gen gen, long exp) {
  if (gen == Gen::X) exp = ((exp % m_) + m_) % m_;
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    long combined = letters_.back().exp + exp;
    if (gen == Gen::X) combined %= m_;  // summands already in [0, m)
    letters_.pop_back();
    if (combined != 0) push(gen, combined);
    return;
  }
  letters_.push_back(Letter{gen, exp});
}

FreeProductWord operator*(const FreeProductWord& a, const FreeProductWord& b) {
  if (a.m_ != b.m_)
    throw std::invalid_argument("FreeProductWord: mixed torsion orders");
  FreeProductWord r = a;
  for (const auto& l : b.letters_) r.push(l.gen, l.exp);
  return r;
}

FreeProductWord inverse(const FreeProductWord& w) {
  FreeProductWord r(w.order_of_x());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    r *= (it->gen == FreeProductWord::Gen::X)
             ? FreeProductWord::x_power(w.order_of_x(), -it->exp)
             : FreeProductWord::t_power(w.order_of_x(), -it->exp);
  return r;
}

long t_exponent_sum(const FreeProductWord& w) {
  long s = 0;
  for (const auto& l : w.letters())
    if (l.gen == FreeProductWord::Gen::T) s += l.exp;
  return s;
}

FreeProductWord word_from_poly(const LaurentPoly& p) {
  if (!p.modulus())
    throw std::invalid_argument("word_from_poly: coefficient modulus required");
  const long m = *p.modulus();
  FreeProductWord w(m);
  for (const auto& [i, a] : p.terms()) {  // ascending exponent order
    if (!a.fits_slong_p())
      throw std::invalid_argument("word_from_poly: coefficient out of range");
    w *= FreeProductWord::t_power(m, i);
    w *= FreeProductWord::x_power(m, a.get_si());
    w *= FreeProductWord::t_power(m, -i);
  }
  return w;
}

LaurentPoly word_to_poly(const FreeProductWord& w) {
  if (t_exponent_sum(w) != 0)
    throw std::invalid_argument(
        "word_to_poly: word has nonzero t-exponent sum");
  LaurentPoly p = LaurentPoly::zero(w.order_of_x());
  long e = 0;
  for (const auto& l : w.letters()) {
    if (l.gen == FreeProductWord::Gen::T)
      e += l.exp;
    else
      p.add_term(e, l.exp);
  }
  return p;
}

LaurentPoly conjugation_action(const FreeProductWord& g,
                               const FreeProductWord& w) {
  return word_to_poly(g * w * inverse(g));
}

long order_in_kernel_ab(const FreeProductWord& w) {
  const long m = w.order_of_x();
  LaurentPoly p = word_to_poly(w);
  long order = 1;
  for (const auto& [e, c] : p.terms()) {
    Int g = gcd(c, Int(m));
    order = std::lcm(order, m / g.get_si());
  }
  return order;
}

std::set<long> square_roots_of_unity(long m) {
  if (m < 2) throw std::invalid_argument("square_roots_of_unity: m >= 2");
  std::set<long> roots;
  for (long a = 0; a < m; ++a)
    if ((a * a) % m == 1) roots.insert(a);
  return roots;
}

FreeProductWord parse_word(const std::string& text, long m) {
  FreeProductWord w(m);
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;  // identity letter
    if (token[0] != 'x' && token[0] != 't')
      throw std::invalid_argument("parse_word: unknown generator in '" +
                                  token + "'");
    long exp = 1;
    if (token.size() > 1) {
      if (token[1] != '^')
        throw std::invalid_argument("parse_word: malformed letter '" + token +
                                    "'");
      size_t pos = 0;
      exp = std::stol(token.substr(2), &pos);
      if (pos != token.size() - 2)
        throw std::invalid_argument("parse_word: malformed exponent in '" +
                                    token + "'");
    }
    w *= (token[0] == 'x') ? FreeProductWord::x_power(m, exp)
                           : FreeProductWord::t_power(m, exp);
  }
  return w;
}

std::string to_string(const FreeProductWord& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << (l.gen == FreeProductWord::Gen::X ? 'x' : 't');
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

}  // namespace linkalg
