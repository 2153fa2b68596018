#ifndef SPINOR_FREUDENTHAL_HPP
#define SPINOR_FREUDENTHAL_HPP

#include <array>

#include "spinor/jordan.hpp"

namespace spinor {

// ---------------------------------------------------------------------------
// The 56-dimensional space P = J + J + C + C with points (X, Y, xi, eta).
// Coordinate order for 56-dim vectors and operators (frozen):
//   X slots (27), Y slots (27), xi, eta.
// The distinguished point is one_point() = (0, 0, 0, 1).
// ---------------------------------------------------------------------------

struct FreudenthalPoint {
  JordanElement X, Y;
  Cx xi{}, eta{};

  FreudenthalPoint operator+(const FreudenthalPoint& o) const;
  FreudenthalPoint operator-(const FreudenthalPoint& o) const;
  FreudenthalPoint operator*(Cx s) const;

  double norm() const;

  Eigen::VectorXcd coords() const;
  static FreudenthalPoint from_coords(const Eigen::VectorXcd& v);

  FreudenthalPoint shift_up() const;    // k -> k+1 on both Jordan parts
  FreudenthalPoint shift_down() const;
};

FreudenthalPoint one_point();

/// kappa_k(X, Y, xi, eta) =
///   (-(E_k,X)E_k + 4 E_k x (E_k x X), (E_k,Y)E_k - 4 E_k x (E_k x Y), -xi, eta)
FreudenthalPoint kappa(int k, const FreudenthalPoint& P);

/// mu_k(X, Y, xi, eta) = (2 E_k x Y + eta E_k, 2 E_k x X + xi E_k, (E_k,Y), (E_k,X))
FreudenthalPoint mu(int k, const FreudenthalPoint& P);

/// Hermitian inner product, slotwise: <X,X'> + <Y,Y'> + conj(xi)xi' + conj(eta)eta'
Cx inner_p(const FreudenthalPoint& P, const FreudenthalPoint& Q);

/// The seventeen rank-1 identity residuals (absolute values / norms), in the
/// fixed order (1)..(17).  A point passes when the max is below tolerance.
std::array<double, 17> rank1_residuals(const FreudenthalPoint& P);
double rank1_max_residual(const FreudenthalPoint& P);

/// Cone parameterization lambda * (X, sharp X, N(X), 1).  Every rank-1 point
/// with eta != 0 is of this form; used as the independent rank-1 oracle.
FreudenthalPoint cone_point(const JordanElement& X, Cx lambda);

/// distance of P (with |eta| not tiny) to its cone reconstruction
double cone_residual(const FreudenthalPoint& P);

}  // namespace spinor

#endif
