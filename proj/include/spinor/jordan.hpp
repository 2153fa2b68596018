#ifndef SPINOR_JORDAN_HPP
#define SPINOR_JORDAN_HPP

#include <Eigen/Dense>
#include <array>

#include "spinor/algebra.hpp"

namespace spinor {

// ---------------------------------------------------------------------------
// The exceptional Jordan algebra, coordinatized as X = (xi1, xi2, xi3;
// x1, x2, x3) for the Hermitian matrix
//
//      [ xi1      x3   bar(x2) ]
//      [ bar(x3)  xi2  x1      ]
//      [ x2  bar(x1)   xi3     ]
//
// Elements are stored complex-capable; the real algebra is the subset with
// vanishing imaginary parts (see field_tag on the serialized form).
//
// Coordinate order for 27-dim vectors and operator matrices (frozen):
//   (xi1, xi2, xi3, x1[e0..e7], x2[e0..e7], x3[e0..e7]).
// ---------------------------------------------------------------------------

struct JordanElement {
  std::array<Cx, 3> xi{};
  std::array<ComplexOctonion, 3> x{};

  JordanElement operator+(const JordanElement& o) const;
  JordanElement operator-(const JordanElement& o) const;
  JordanElement operator-() const;
  JordanElement operator*(Cx s) const;

  double norm() const;  // sqrt of <X, X>
  double imag_norm() const;

  static JordanElement diag_unit(int k);  // E_k
  static JordanElement identity();        // E = E1 + E2 + E3

  JordanElement real_part() const;
  JordanElement imag_part() const;

  Eigen::VectorXcd coords() const;
  static JordanElement from_coords(const Eigen::VectorXcd& v);

  /// complex conjugation tau applied to every coefficient
  JordanElement tau() const;

  /// cyclic index bump: slot k of the result is slot k-1 of the input
  JordanElement shift_up() const;
  JordanElement shift_down() const;
};

inline JordanElement operator*(Cx s, const JordanElement& X) { return X * s; }
inline JordanElement operator*(double s, const JordanElement& X) { return X * Cx(s, 0); }

/// Freudenthal adjoint X x X.  Component form (adjugate order):
///   xi_k slot: xi_{k+1} xi_{k+2} - x_k bar(x_k)
///   x_k  slot: bar(x_{k+1} x_{k+2}) - xi_k x_k
JordanElement sharp(const JordanElement& X);

/// symmetric bilinear cross product, cross(X, X) = sharp(X)
JordanElement cross(const JordanElement& X, const JordanElement& Y);

double trace_real(const JordanElement& X);
Cx trace(const JordanElement& X);

/// bilinear trace form (X, Y) = sum xi_k eta_k + 2 sum (x_k, y_k)
Cx bilinear_form(const JordanElement& X, const JordanElement& Y);

/// positive-definite Hermitian form <X, Y> = (tau X, Y)
Cx hermitian_form(const JordanElement& X, const JordanElement& Y);

/// cubic norm, N(X) = (X, sharp X) / 3; satisfies sharp(sharp X) = N(X) X
Cx cubic_norm(const JordanElement& X);

struct RankOneReport {
  bool rank_one = false;
  double residual = 0;  // norm of sharp(X)
};
RankOneReport is_rank_one(const JordanElement& X, double tol);

}  // namespace spinor

#endif
