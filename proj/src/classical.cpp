#include "spinor/classical.hpp"

#include <complex>

namespace spinor {

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::Real: return "real";
    case Ring::Complex: return "complex";
    case Ring::Quaternion: return "quaternion";
  }
  return "?";
}

QMat3 QMat3::identity(Ring r) {
  QMat3 A;
  A.ring = r;
  for (int i = 0; i < 3; ++i) A.at(i, i) = Quaternion::real(1);
  return A;
}

QMat3 QMat3::operator*(const QMat3& o) const {
  QMat3 z;
  z.ring = ring;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Quaternion s;
      for (int k = 0; k < 3; ++k) s = s + at(i, k) * o.at(k, j);
      z.at(i, j) = s;
    }
  return z;
}

QMat3 QMat3::operator-(const QMat3& o) const {
  QMat3 z;
  z.ring = ring;
  for (int i = 0; i < 9; ++i) z.m[i] = m[i] - o.m[i];
  return z;
}

QMat3 QMat3::adjoint() const {
  QMat3 z;
  z.ring = ring;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) z.at(i, j) = at(j, i).conj();
  return z;
}

std::array<Quaternion, 3> QMat3::column(int j) const { return {at(0, j), at(1, j), at(2, j)}; }

double QMat3::frobenius() const {
  double s = 0;
  for (const Quaternion& q : m) s += q.norm2();
  return std::sqrt(s);
}

namespace {

Cx to_cx(const Quaternion& q) { return Cx(q.w, q.x); }

Cx det3_commutative(const QMat3& A) {
  auto c = [&](int i, int j) { return to_cx(A.at(i, j)); };
  return c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1)) -
         c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0)) +
         c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0));
}

std::array<Quaternion, 3> apply_col(const QMat3& A, const std::array<Quaternion, 3>& v) {
  std::array<Quaternion, 3> z;
  for (int i = 0; i < 3; ++i) {
    Quaternion s;
    for (int k = 0; k < 3; ++k) s = s + A.at(i, k) * v[k];
    z[i] = s;
  }
  return z;
}

/// Plane rotation in slots (i, j) with left phase factors e^{u phi/2} whose
/// image of v has slot j cleared: solves v_j v_i^{-1} = -tan(theta) e^{u phi}.
/// mirrored selects the second exact branch (theta, phi) -> (pi-theta, phi+pi).
QMat3 plane_clear(Ring ring, const std::array<Quaternion, 3>& v, int i, int j, bool mirrored) {
  Quaternion ratio = v[j] * v[i].inverse();
  Quaternion u{0, 1, 0, 0};
  double phi = 0, r;
  if (ring == Ring::Real) {
    r = ratio.w;  // signed; no quaternion phase in the real ring
  } else {
    QuatPolar pol = quat_polar(ratio);
    u = pol.u;
    phi = pol.theta;
    r = pol.r;
  }
  double theta = M_PI - std::atan(r);
  if (mirrored) {
    theta = std::atan(r);
    phi += M_PI;
  }
  QMat3 B = QMat3::identity(ring);
  Quaternion ep = quat_exp(u, phi / 2);
  Quaternion em = quat_exp(u, -phi / 2);
  double c = std::cos(theta), s = std::sin(theta);
  B.at(i, i) = ep * c;
  B.at(i, j) = -(em * s);
  B.at(j, i) = ep * s;
  B.at(j, j) = em * c;
  return B;
}

}  // namespace

double group_residual(const QMat3& A) {
  double r = (A.adjoint() * A - QMat3::identity(A.ring)).frobenius();
  if (A.ring == Ring::Quaternion) return r;
  r = std::max(r, std::abs(det3_commutative(A) - Cx(1, 0)));
  for (const Quaternion& q : A.m) {
    double leak = (A.ring == Ring::Real) ? std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z)
                                         : std::sqrt(q.y * q.y + q.z * q.z);
    r = std::max(r, leak);
  }
  return r;
}

FactorTriple decompose_classical(const QMat3& A, double membership_tol) {
  if (group_residual(A) > membership_tol) {
    throw NotInGroup(std::string("matrix is not in the declared group (") + ring_name(A.ring) +
                     ")");
  }
  const Ring ring = A.ring;
  const QMat3 E = QMat3::identity(ring);
  const double scale = std::max(1.0, A.frobenius());

  std::array<Quaternion, 3> col = A.column(0);  // A e1
  QMat3 B1 = E;
  if (col[1].norm() > 1e-12 * scale) {
    if (col[2].norm() > 1e-12 * scale) {
      B1 = plane_clear(ring, col, 2, 1, false);
      if (apply_col(B1, col)[1].norm() > 1e-10 * scale)
        B1 = plane_clear(ring, col, 2, 1, true);
    } else {
      // third slot empty: a half-plane quarter turn moves slot 2 into slot 3
      B1.at(1, 1) = Quaternion{};
      B1.at(2, 2) = Quaternion{};
      B1.at(1, 2) = Quaternion::real(-1);
      B1.at(2, 1) = Quaternion::real(1);
    }
  }
  std::array<Quaternion, 3> colb = apply_col(B1, col);  // (b1, 0, b3)

  QMat3 B2 = E;
  if (colb[2].norm() > 1e-12 * scale) {
    if (colb[0].norm() > 1e-12 * scale) {
      B2 = plane_clear(ring, colb, 0, 2, false);
      if (apply_col(B2, colb)[2].norm() > 1e-10 * scale)
        B2 = plane_clear(ring, colb, 0, 2, true);
    } else {
      B2.at(0, 0) = Quaternion{};
      B2.at(2, 2) = Quaternion{};
      B2.at(2, 0) = Quaternion::real(-1);
      B2.at(0, 2) = Quaternion::real(1);
    }
  }
  std::array<Quaternion, 3> colc = apply_col(B2, colb);  // (c1, 0, 0), |c1| = 1

  QMat3 B2p = E;
  {
    QuatPolar pol = quat_polar(colc[0]);
    B2p.at(0, 0) = quat_exp(pol.u, -pol.theta);
    B2p.at(2, 2) = quat_exp(pol.u, pol.theta);
  }

  FactorTriple t;
  t.A1 = B1.adjoint();
  t.A2 = (B2p * B2).adjoint();
  t.A1p = B2p * B2 * B1 * A;
  return t;
}

ClassicalReport verify_factors(const QMat3& A, const FactorTriple& t) {
  ClassicalReport rep;
  rep.reconstruction = (t.A1 * t.A2 * t.A1p - A).frobenius();
  std::array<Quaternion, 3> e1{Quaternion::real(1), Quaternion{}, Quaternion{}};
  std::array<Quaternion, 3> e2{Quaternion{}, Quaternion::real(1), Quaternion{}};
  auto colres = [](const std::array<Quaternion, 3>& a, const std::array<Quaternion, 3>& b) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += (a[i] - b[i]).norm2();
    return std::sqrt(s);
  };
  rep.fix1 = colres(apply_col(t.A1, e1), e1);
  rep.fix2 = colres(apply_col(t.A2, e2), e2);
  rep.fix1p = colres(apply_col(t.A1p, e1), e1);
  return rep;
}

QMat3 sample_group_matrix(Ring r, Rng& rng) {
  QMat3 A;
  A.ring = r;
  for (int i = 0; i < 9; ++i) {
    switch (r) {
      case Ring::Real: A.m[i] = Quaternion::real(rng.normal()); break;
      case Ring::Complex: A.m[i] = Quaternion{rng.normal(), rng.normal(), 0, 0}; break;
      case Ring::Quaternion:
        A.m[i] = Quaternion{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        break;
    }
  }
  for (int j = 0; j < 3; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < j; ++prev) {
        Quaternion ip;
        for (int i = 0; i < 3; ++i) ip = ip + A.at(i, prev).conj() * A.at(i, j);
        for (int i = 0; i < 3; ++i) A.at(i, j) = A.at(i, j) - A.at(i, prev) * ip;
      }
    }
    double n = 0;
    for (int i = 0; i < 3; ++i) n += A.at(i, j).norm2();
    n = std::sqrt(n);
    for (int i = 0; i < 3; ++i) A.at(i, j) = A.at(i, j) * (1.0 / n);
  }
  if (r != Ring::Quaternion) {
    Cx fix = Cx(1, 0) / det3_commutative(A);
    for (int i = 0; i < 3; ++i) {
      Cx v = to_cx(A.at(i, 2)) * fix;
      A.at(i, 2) = Quaternion{v.real(), v.imag(), 0, 0};
    }
  }
  return A;
}

}  // namespace spinor
