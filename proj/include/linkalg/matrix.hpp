#pragma once

#include <Eigen/Core>

#include "linkalg/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<linkalg::LaurentPoly>
    : GenericNumTraits<linkalg::LaurentPoly> {
  typedef linkalg::LaurentPoly Real;
  typedef linkalg::LaurentPoly NonInteger;
  typedef linkalg::LaurentPoly Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
};

}  // namespace Eigen

namespace linkalg {

using PolyMatrix =
    Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;
using PolyVector = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Entrywise involution composed with transposition; the matrix-level
// companion of conj-transpose.
PolyMatrix involute_transpose(const PolyMatrix& m);

PolyVector involute_entries(const PolyVector& v);
PolyMatrix involute_entries(const PolyMatrix& m);

bool matrix_equal(const PolyMatrix& a, const PolyMatrix& b);

// Exact determinant by cofactor expansion.  Matrices in this library are
// Gram matrices of desk-scale forms, so the factorial cost is irrelevant
// and no division in the coefficient ring is ever needed.
LaurentPoly determinant(const PolyMatrix& m);

// Exact adjugate: adjugate(m) * m = m * adjugate(m) = determinant(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

IntMatrix eval_at_one(const PolyMatrix& m);

PolyMatrix poly_identity(Eigen::Index n);

}  // namespace linkalg
