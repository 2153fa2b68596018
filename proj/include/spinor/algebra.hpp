#ifndef SPINOR_ALGEBRA_HPP
#define SPINOR_ALGEBRA_HPP

#include <array>
#include <cmath>
#include <complex>

namespace spinor {

using Cx = std::complex<double>;

// ---------------------------------------------------------------------------
// Quaternions, basis 1, i, j, k with ij = k, jk = i, ki = j.
// ---------------------------------------------------------------------------

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  static Quaternion real(double r) { return {r, 0, 0, 0}; }

  Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Quaternion inverse() const {
    double n2 = norm2();
    Quaternion c = conj();
    return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
  }
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Polar form a = r (cos(theta) + u sin(theta)), u^2 = -1, r = |a|, theta in [0, pi].
/// Real a uses the tie-break u = i (theta = 0 for a >= 0, pi for a < 0).
struct QuatPolar {
  double r = 0;
  Quaternion u;  // unit imaginary
  double theta = 0;
};

QuatPolar quat_polar(const Quaternion& a);

/// r e^{u theta} = r (cos(theta) + u sin(theta)) for unit imaginary u.
Quaternion quat_exp(const Quaternion& u, double theta);

// ---------------------------------------------------------------------------
// Octonions, basis e0 = 1, e1..e7, built by Cayley-Dickson doubling over H:
//   (a, b)(c, d) = (ac - conj(d) b,  d a + b conj(c)),
// with e1 = (i,0), e2 = (j,0), e3 = (k,0), e4 = (0,1), e5 = (0,i),
// e6 = (0,j), e7 = (0,k).  Under this convention e1 e2 = e3 and
// (e1 e2) e4 = e7 while e1 (e2 e4) = -e7.
// ---------------------------------------------------------------------------

struct Octonion {
  std::array<double, 8> c{};

  Octonion() = default;
  static Octonion unit(int i) {
    Octonion o;
    o.c[i] = 1;
    return o;
  }
  static Octonion real(double r) {
    Octonion o;
    o.c[0] = r;
    return o;
  }

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  Octonion operator+(const Octonion& o) const {
    Octonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = c[i] + o.c[i];
    return z;
  }
  Octonion operator-(const Octonion& o) const {
    Octonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = c[i] - o.c[i];
    return z;
  }
  Octonion operator-() const {
    Octonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = -c[i];
    return z;
  }
  Octonion operator*(double s) const {
    Octonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = c[i] * s;
    return z;
  }

  Octonion conj() const {
    Octonion z = -*this;
    z.c[0] = c[0];
    return z;
  }
  double norm2() const {
    double s = 0;
    for (double v : c) s += v * v;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }
};

inline Octonion operator*(double s, const Octonion& o) { return o * s; }

/// Structure constants e_i e_j = sign(i,j) e_{index(i,j)}, generated from the
/// Cayley-Dickson doubling above and frozen for the whole library.
struct OctTable {
  std::array<std::array<int, 8>, 8> index;
  std::array<std::array<double, 8>, 8> sign;
};
const OctTable& oct_table();

Octonion oct_mul(const Octonion& a, const Octonion& b);
double oct_inner(const Octonion& a, const Octonion& b);

// ---------------------------------------------------------------------------
// Complexified octonions x = p + i q with a commuting complex unit i.
// Stored as 8 complex coefficients.  Carries two conjugations: bar (octonion)
// and tau (complex), which commute.
// ---------------------------------------------------------------------------

struct ComplexOctonion {
  std::array<Cx, 8> c{};

  ComplexOctonion() = default;
  explicit ComplexOctonion(const Octonion& re, const Octonion& im = Octonion{}) {
    for (int i = 0; i < 8; ++i) c[i] = Cx(re.c[i], im.c[i]);
  }

  Cx& operator[](int i) { return c[i]; }
  Cx operator[](int i) const { return c[i]; }

  ComplexOctonion operator+(const ComplexOctonion& o) const {
    ComplexOctonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = c[i] + o.c[i];
    return z;
  }
  ComplexOctonion operator-(const ComplexOctonion& o) const {
    ComplexOctonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = c[i] - o.c[i];
    return z;
  }
  ComplexOctonion operator-() const {
    ComplexOctonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = -c[i];
    return z;
  }
  ComplexOctonion operator*(Cx s) const {
    ComplexOctonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = c[i] * s;
    return z;
  }

  /// octonion conjugation p + iq -> conj(p) + i conj(q)
  ComplexOctonion bar() const {
    ComplexOctonion z = -*this;
    z.c[0] = c[0];
    return z;
  }
  /// complex conjugation p + iq -> p - iq
  ComplexOctonion tau() const {
    ComplexOctonion z;
    for (int i = 0; i < 8; ++i) z.c[i] = std::conj(c[i]);
    return z;
  }

  Octonion re() const {
    Octonion o;
    for (int i = 0; i < 8; ++i) o.c[i] = c[i].real();
    return o;
  }
  Octonion im() const {
    Octonion o;
    for (int i = 0; i < 8; ++i) o.c[i] = c[i].imag();
    return o;
  }
  double norm2() const {
    double s = 0;
    for (const Cx& v : c) s += std::norm(v);
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }
  bool is_zero(double tol = 0.0) const { return norm() <= tol; }
};

inline ComplexOctonion operator*(Cx s, const ComplexOctonion& o) { return o * s; }
inline ComplexOctonion operator*(double s, const ComplexOctonion& o) { return o * Cx(s, 0); }

/// complex-bilinear extension of the octonion product
ComplexOctonion coct_mul(const ComplexOctonion& a, const ComplexOctonion& b);
/// complex-bilinear inner product (a, b) = sum a_i b_i
Cx coct_inner(const ComplexOctonion& a, const ComplexOctonion& b);

}  // namespace spinor

#endif
