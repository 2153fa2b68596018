#include "spinor/algebra.hpp"

namespace spinor {

QuatPolar quat_polar(const Quaternion& a) {
  QuatPolar p;
  p.r = a.norm();
  double imn = std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
  if (imn < 1e-300) {
    p.u = Quaternion{0, 1, 0, 0};
    p.theta = (a.w >= 0) ? 0.0 : M_PI;
    return p;
  }
  p.u = Quaternion{0, a.x / imn, a.y / imn, a.z / imn};
  p.theta = std::atan2(imn, a.w);  // in (0, pi)
  return p;
}

Quaternion quat_exp(const Quaternion& u, double theta) {
  Quaternion q = u * std::sin(theta);
  q.w += std::cos(theta);
  return q;
}

namespace {
Quaternion quat_from(const double* v) { return {v[0], v[1], v[2], v[3]}; }

OctTable build_table() {
  OctTable t;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      double a[8] = {0}, b[8] = {0};
      a[i] = 1;
      b[j] = 1;
      Quaternion a1 = quat_from(a), a2 = quat_from(a + 4);
      Quaternion b1 = quat_from(b), b2 = quat_from(b + 4);
      Quaternion z1 = a1 * b1 - b2.conj() * a2;
      Quaternion z2 = b2 * a1 + a2 * b1.conj();
      double z[8] = {z1.w, z1.x, z1.y, z1.z, z2.w, z2.x, z2.y, z2.z};
      int k = 0;
      for (int m = 1; m < 8; ++m)
        if (std::abs(z[m]) > std::abs(z[k])) k = m;
      t.index[i][j] = k;
      t.sign[i][j] = z[k];
    }
  }
  return t;
}
}  // namespace

const OctTable& oct_table() {
  static const OctTable table = build_table();
  return table;
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
  const OctTable& t = oct_table();
  Octonion z;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      z.c[t.index[i][j]] += t.sign[i][j] * a.c[i] * b.c[j];
    }
  }
  return z;
}

double oct_inner(const Octonion& a, const Octonion& b) {
  double s = 0;
  for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
  return s;
}

ComplexOctonion coct_mul(const ComplexOctonion& a, const ComplexOctonion& b) {
  const OctTable& t = oct_table();
  ComplexOctonion z;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == Cx(0, 0)) continue;
    for (int j = 0; j < 8; ++j) {
      z.c[t.index[i][j]] += t.sign[i][j] * a.c[i] * b.c[j];
    }
  }
  return z;
}

Cx coct_inner(const ComplexOctonion& a, const ComplexOctonion& b) {
  Cx s = 0;
  for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
  return s;
}

}  // namespace spinor
