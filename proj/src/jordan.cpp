#include "spinor/jordan.hpp"

namespace spinor {

JordanElement JordanElement::operator+(const JordanElement& o) const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[k] = xi[k] + o.xi[k];
    z.x[k] = x[k] + o.x[k];
  }
  return z;
}

JordanElement JordanElement::operator-(const JordanElement& o) const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[k] = xi[k] - o.xi[k];
    z.x[k] = x[k] - o.x[k];
  }
  return z;
}

JordanElement JordanElement::operator-() const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[k] = -xi[k];
    z.x[k] = -x[k];
  }
  return z;
}

JordanElement JordanElement::operator*(Cx s) const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[k] = xi[k] * s;
    z.x[k] = x[k] * s;
  }
  return z;
}

double JordanElement::norm() const {
  double s = 0;
  for (int k = 0; k < 3; ++k) s += std::norm(xi[k]) + 2.0 * x[k].norm2();
  return std::sqrt(s);
}

double JordanElement::imag_norm() const { return imag_part().norm(); }

JordanElement JordanElement::diag_unit(int k) {
  JordanElement z;
  z.xi[k] = 1;
  return z;
}

JordanElement JordanElement::identity() {
  JordanElement z;
  z.xi = {Cx(1), Cx(1), Cx(1)};
  return z;
}

JordanElement JordanElement::real_part() const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[k] = xi[k].real();
    z.x[k] = ComplexOctonion(x[k].re());
  }
  return z;
}

JordanElement JordanElement::imag_part() const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[k] = xi[k].imag();
    z.x[k] = ComplexOctonion(x[k].im());
  }
  return z;
}

Eigen::VectorXcd JordanElement::coords() const {
  Eigen::VectorXcd v(27);
  for (int k = 0; k < 3; ++k) v(k) = xi[k];
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 8; ++i) v(3 + 8 * k + i) = x[k][i];
  return v;
}

JordanElement JordanElement::from_coords(const Eigen::VectorXcd& v) {
  JordanElement z;
  for (int k = 0; k < 3; ++k) z.xi[k] = v(k);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 8; ++i) z.x[k][i] = v(3 + 8 * k + i);
  return z;
}

JordanElement JordanElement::tau() const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[k] = std::conj(xi[k]);
    z.x[k] = x[k].tau();
  }
  return z;
}

JordanElement JordanElement::shift_up() const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[(k + 1) % 3] = xi[k];
    z.x[(k + 1) % 3] = x[k];
  }
  return z;
}

JordanElement JordanElement::shift_down() const {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    z.xi[k] = xi[(k + 1) % 3];
    z.x[k] = x[(k + 1) % 3];
  }
  return z;
}

JordanElement sharp(const JordanElement& X) {
  JordanElement z;
  for (int k = 0; k < 3; ++k) {
    int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
    z.xi[k] = X.xi[k1] * X.xi[k2] - coct_mul(X.x[k], X.x[k].bar())[0];
    z.x[k] = coct_mul(X.x[k1], X.x[k2]).bar() - X.xi[k] * X.x[k];
  }
  return z;
}

JordanElement cross(const JordanElement& X, const JordanElement& Y) {
  JordanElement z = sharp(X + Y) - sharp(X) - sharp(Y);
  return z * Cx(0.5);
}

double trace_real(const JordanElement& X) { return (X.xi[0] + X.xi[1] + X.xi[2]).real(); }
Cx trace(const JordanElement& X) { return X.xi[0] + X.xi[1] + X.xi[2]; }

Cx bilinear_form(const JordanElement& X, const JordanElement& Y) {
  Cx s = 0;
  for (int k = 0; k < 3; ++k) s += X.xi[k] * Y.xi[k] + 2.0 * coct_inner(X.x[k], Y.x[k]);
  return s;
}

Cx hermitian_form(const JordanElement& X, const JordanElement& Y) {
  Cx s = 0;
  for (int k = 0; k < 3; ++k) {
    s += std::conj(X.xi[k]) * Y.xi[k];
    for (int i = 0; i < 8; ++i) s += 2.0 * std::conj(X.x[k][i]) * Y.x[k][i];
  }
  return s;
}

Cx cubic_norm(const JordanElement& X) { return bilinear_form(X, sharp(X)) / 3.0; }

RankOneReport is_rank_one(const JordanElement& X, double tol) {
  RankOneReport r;
  r.residual = sharp(X).norm();
  r.rank_one = r.residual <= tol;
  return r;
}

}  // namespace spinor
