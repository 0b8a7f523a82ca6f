#pragma once

// Shared random generators and independent oracles for the test suites.
// Oracles deliberately avoid the library code paths they are used to check.

#include <random>

#include "linkalg/gluing.hpp"

namespace linkalg::testing {

using Rng = std::mt19937_64;

inline LaurentPoly random_poly(Rng& rng, long max_span, long coeff_bound,
                               std::optional<long> mod = std::nullopt) {
  std::uniform_int_distribution<long> exp_dist(-max_span, max_span);
  std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> count_dist(0, 4);
  LaurentPoly p = LaurentPoly::zero(mod);
  int terms = count_dist(rng);
  for (int i = 0; i < terms; ++i) p.add_term(exp_dist(rng), coeff_dist(rng));
  return p;
}

inline LaurentPoly random_nonzero_poly(Rng& rng, long max_span,
                                       long coeff_bound) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_span, coeff_bound);
    if (!p.is_zero()) return p;
  }
}

inline LaurentPoly random_symmetric_poly(Rng& rng, long max_span,
                                         long coeff_bound) {
  LaurentPoly half = random_poly(rng, max_span, coeff_bound);
  std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
  return half + involute(half) + LaurentPoly(coeff_dist(rng));
}

inline PolyVector random_vector(Rng& rng, Eigen::Index n, long max_span,
                                long coeff_bound) {
  PolyVector v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v(i) = random_poly(rng, max_span, coeff_bound);
  return v;
}

// Random even nondegenerate Hermitian form: A + involute-transpose(A) is
// Hermitian with diagonal entries of the form a + conj(a).
inline HermitianForm random_even_form(Rng& rng, Eigen::Index rank,
                                      long max_span, long coeff_bound,
                                      bool nondegenerate_at_one = false) {
  for (;;) {
    PolyMatrix a(rank, rank);
    for (Eigen::Index i = 0; i < rank; ++i)
      for (Eigen::Index j = 0; j < rank; ++j)
        a(i, j) = random_poly(rng, max_span, coeff_bound);
    PolyMatrix g = a + involute_transpose(a);
    LaurentPoly det = determinant(g);
    if (det.is_zero()) continue;
    if (nondegenerate_at_one && det.eval_at_one() == 0) continue;
    return HermitianForm(g);
  }
}

// Random matrix invertible over Z[t^{+-1}]: a product of elementary
// transvections, diagonal unit scalings and swaps.
inline PolyMatrix random_unimodular(Rng& rng, Eigen::Index n) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<long> idx(0, n - 1);
  std::uniform_int_distribution<long> exp_dist(-2, 2);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  PolyMatrix f = poly_identity(n);
  for (int step = 0; step < 4; ++step) {
    PolyMatrix e = poly_identity(n);
    Eigen::Index i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0:  // transvection
        if (i != j) e(i, j) = random_poly(rng, 1, 2);
        break;
      case 1:  // unit scaling by +-t^k
        e(i, i) = LaurentPoly::term(sign_dist(rng) ? 1 : -1, exp_dist(rng));
        break;
      default:  // swap
        if (i != j) {
          e(i, i) = LaurentPoly(0);
          e(j, j) = LaurentPoly(0);
          e(i, j) = LaurentPoly(1);
          e(j, i) = LaurentPoly(1);
        }
        break;
    }
    f = f * e;
  }
  return f;
}

// Brute-force witness search for c = a + involute(a) with the support of a
// confined to the span of c and coefficients bounded by `bound`.  Used as
// the independent oracle for the parity criterion.
inline bool brute_force_even_decomposition(const LaurentPoly& c, long bound) {
  if (c.is_zero()) return true;
  const auto [lo, hi] = *c.span();
  const long width = hi - lo + 1;
  const long base = 2 * bound + 1;
  double space = 1;
  for (long i = 0; i < width; ++i) space *= static_cast<double>(base);
  if (space > 5e7)
    throw std::invalid_argument("brute_force_even_decomposition: too large");

  std::vector<long> coeffs(static_cast<size_t>(width), -bound);
  for (;;) {
    LaurentPoly a;
    for (long i = 0; i < width; ++i)
      a.add_term(lo + i, coeffs[static_cast<size_t>(i)]);
    if (a + involute(a) == c) return true;
    long i = 0;
    for (; i < width; ++i) {
      if (++coeffs[static_cast<size_t>(i)] <= bound) break;
      coeffs[static_cast<size_t>(i)] = -bound;
    }
    if (i == width) return false;
  }
}

// Rank-one union Gram matrix from the closed formula
// [ (1 - u conj(u))/p , -conj(u) ; -u , -p ], kept independent of the
// general kernel-basis construction.
inline PolyMatrix rank_one_union_oracle(const LaurentPoly& u,
                                        const LaurentPoly& p) {
  auto top = exact_divide(LaurentPoly(1) - u * involute(u), p);
  if (!top)
    throw std::invalid_argument("rank_one_union_oracle: u is not unitary mod p");
  PolyMatrix g(2, 2);
  g(0, 0) = *top;
  g(0, 1) = -involute(u);
  g(1, 0) = -u;
  g(1, 1) = -p;
  return g;
}

// Signature by exact rational congruence diagonalization; an independent
// route to compare against the fraction-free pivoting implementation.
inline long signature_oracle(const IntMatrix& input) {
  const Eigen::Index n = input.rows();
  std::vector<std::vector<mpq_class>> a(static_cast<size_t>(n),
                                        std::vector<mpq_class>(
                                            static_cast<size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = input(i, j);

  long sig = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    size_t uk = static_cast<size_t>(k);
    if (a[uk][uk] == 0) {
      size_t swap_with = uk;
      for (size_t j = uk + 1; j < static_cast<size_t>(n); ++j)
        if (a[j][j] != 0) {
          swap_with = j;
          break;
        }
      if (swap_with != uk) {
        std::swap(a[uk], a[swap_with]);
        for (auto& row : a) std::swap(row[uk], row[swap_with]);
      } else {
        size_t partner = uk;
        for (size_t j = uk + 1; j < static_cast<size_t>(n); ++j)
          if (a[uk][j] != 0) {
            partner = j;
            break;
          }
        if (partner == uk)
          throw std::domain_error("signature_oracle: singular matrix");
        for (size_t j = 0; j < static_cast<size_t>(n); ++j)
          a[uk][j] += a[partner][j];
        for (size_t i = 0; i < static_cast<size_t>(n); ++i)
          a[i][uk] += a[i][partner];
      }
    }
    mpq_class pivot = a[uk][uk];
    sig += pivot > 0 ? 1 : -1;
    for (size_t i = uk + 1; i < static_cast<size_t>(n); ++i) {
      mpq_class factor = a[i][uk] / pivot;
      if (factor == 0) continue;
      for (size_t j = 0; j < static_cast<size_t>(n); ++j)
        a[i][j] -= factor * a[uk][j];
      for (size_t j = 0; j < static_cast<size_t>(n); ++j)
        a[j][i] -= factor * a[j][uk];
    }
  }
  return sig;
}

}  // namespace linkalg::testing
