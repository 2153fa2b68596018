#include "spinor/freudenthal.hpp"

namespace spinor {

FreudenthalPoint FreudenthalPoint::operator+(const FreudenthalPoint& o) const {
  return {X + o.X, Y + o.Y, xi + o.xi, eta + o.eta};
}
FreudenthalPoint FreudenthalPoint::operator-(const FreudenthalPoint& o) const {
  return {X - o.X, Y - o.Y, xi - o.xi, eta - o.eta};
}
FreudenthalPoint FreudenthalPoint::operator*(Cx s) const { return {X * s, Y * s, xi * s, eta * s}; }

double FreudenthalPoint::norm() const {
  double a = X.norm(), b = Y.norm();
  return std::sqrt(a * a + b * b + std::norm(xi) + std::norm(eta));
}

Eigen::VectorXcd FreudenthalPoint::coords() const {
  Eigen::VectorXcd v(56);
  v.segment(0, 27) = X.coords();
  v.segment(27, 27) = Y.coords();
  v(54) = xi;
  v(55) = eta;
  return v;
}

FreudenthalPoint FreudenthalPoint::from_coords(const Eigen::VectorXcd& v) {
  FreudenthalPoint P;
  P.X = JordanElement::from_coords(v.segment(0, 27));
  P.Y = JordanElement::from_coords(v.segment(27, 27));
  P.xi = v(54);
  P.eta = v(55);
  return P;
}

FreudenthalPoint FreudenthalPoint::shift_up() const { return {X.shift_up(), Y.shift_up(), xi, eta}; }
FreudenthalPoint FreudenthalPoint::shift_down() const {
  return {X.shift_down(), Y.shift_down(), xi, eta};
}

FreudenthalPoint one_point() {
  FreudenthalPoint P;
  P.eta = 1;
  return P;
}

FreudenthalPoint kappa(int k, const FreudenthalPoint& P) {
  JordanElement Ek = JordanElement::diag_unit(k);
  JordanElement Xp = cross(Ek, cross(Ek, P.X)) * Cx(4);
  Xp.xi[k] -= bilinear_form(Ek, P.X);
  JordanElement Yp = -(cross(Ek, cross(Ek, P.Y)) * Cx(4));
  Yp.xi[k] += bilinear_form(Ek, P.Y);
  return {Xp, Yp, -P.xi, P.eta};
}

FreudenthalPoint mu(int k, const FreudenthalPoint& P) {
  JordanElement Ek = JordanElement::diag_unit(k);
  JordanElement Xp = cross(Ek, P.Y) * Cx(2);
  Xp.xi[k] += P.eta;
  JordanElement Yp = cross(Ek, P.X) * Cx(2);
  Yp.xi[k] += P.xi;
  return {Xp, Yp, bilinear_form(Ek, P.Y), bilinear_form(Ek, P.X)};
}

Cx inner_p(const FreudenthalPoint& P, const FreudenthalPoint& Q) {
  return hermitian_form(P.X, Q.X) + hermitian_form(P.Y, Q.Y) + std::conj(P.xi) * Q.xi +
         std::conj(P.eta) * Q.eta;
}

std::array<double, 17> rank1_residuals(const FreudenthalPoint& P) {
  const auto& xi_ = P.X.xi;
  const auto& x = P.X.x;
  const auto& et = P.Y.xi;
  const auto& y = P.Y.x;
  Cx xi = P.xi, eta = P.eta;

  auto sq = [](const ComplexOctonion& a) { return coct_mul(a, a.bar())[0]; };
  std::array<double, 17> r{};
  Cx id1 = xi_[0] * et[0] + xi_[1] * et[1] + xi_[2] * et[2] - 3.0 * xi * eta;
  for (int k = 0; k < 3; ++k) id1 += 2.0 * coct_inner(x[k], y[k]);
  r[0] = std::abs(id1);
  for (int k = 0; k < 3; ++k) {
    int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
    // (2)-(4): xi_{k+1} xi_{k+2} - eta_k eta - x_k bar(x_k)
    r[1 + k] = std::abs(xi_[k1] * xi_[k2] - et[k] * eta - sq(x[k]));
    // (5)-(7): xi_k x_k + eta y_k - bar(x_{k+1} x_{k+2})
    r[4 + k] = (xi_[k] * x[k] + eta * y[k] - coct_mul(x[k1], x[k2]).bar()).norm();
    // (8)-(10): eta_{k+1} eta_{k+2} - xi_k xi - y_k bar(y_k)
    r[7 + k] = std::abs(et[k1] * et[k2] - xi_[k] * xi - sq(y[k]));
    // (11)-(13): eta_k y_k + xi x_k - bar(y_{k+1} y_{k+2})
    r[10 + k] = (et[k] * y[k] + xi * x[k] - coct_mul(y[k1], y[k2]).bar()).norm();
  }
  // (14)-(17)
  r[13] = (et[2] * x[0] + xi_[1] * y[0] + coct_mul(y[1], x[2]).bar()).norm();
  r[14] = (et[2] * x[1] + xi_[0] * y[1] + coct_mul(x[2], y[0]).bar()).norm();
  r[15] = (et[1] * x[2] + xi_[0] * y[2] + coct_mul(y[0], x[1]).bar()).norm();
  r[16] = (et[0] * x[2] + xi_[1] * y[2] + coct_mul(x[0], y[1]).bar()).norm();
  return r;
}

double rank1_max_residual(const FreudenthalPoint& P) {
  auto r = rank1_residuals(P);
  double m = 0;
  for (double v : r) m = std::max(m, v);
  return m;
}

FreudenthalPoint cone_point(const JordanElement& X, Cx lambda) {
  FreudenthalPoint P;
  P.X = X * lambda;
  P.Y = sharp(X) * lambda;
  P.xi = cubic_norm(X) * lambda;
  P.eta = lambda;
  return P;
}

double cone_residual(const FreudenthalPoint& P) {
  JordanElement Xn = P.X * (Cx(1) / P.eta);
  return (P - cone_point(Xn, P.eta)).norm();
}

}  // namespace spinor
