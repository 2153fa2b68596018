#ifndef SPINOR_CLASSICAL_HPP
#define SPINOR_CLASSICAL_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "spinor/errors.hpp"
#include "spinor/rng.hpp"

namespace spinor {

// ---------------------------------------------------------------------------
// 3x3 matrices over a declared scalar ring (real, complex, quaternion), all
// stored with quaternion entries; the real and complex cases restrict the
// scalars.  Covers SO(3), SU(3) and Sp(3) through one code path.
// ---------------------------------------------------------------------------

enum class Ring { Real, Complex, Quaternion };

const char* ring_name(Ring r);

struct QMat3 {
  std::array<Quaternion, 9> m{};
  Ring ring = Ring::Real;

  Quaternion& at(int i, int j) { return m[3 * i + j]; }
  const Quaternion& at(int i, int j) const { return m[3 * i + j]; }

  static QMat3 identity(Ring r);
  QMat3 operator*(const QMat3& o) const;
  QMat3 operator-(const QMat3& o) const;
  QMat3 adjoint() const;  // conjugate transpose
  std::array<Quaternion, 3> column(int j) const;
  double frobenius() const;
};

/// residual of the group law: ||A*A - E||_F plus |det A - 1| for real/complex
double group_residual(const QMat3& A);

struct FactorTriple {
  QMat3 A1, A2, A1p;  // A = A1 A2 A1p; A1, A1p fix e1, A2 fixes e2
};

/// Factor A as A1 A2 A1p with A1, A1p fixing e1 and A2 fixing e2.
/// The construction clears the second then third slot of A e1 with plane
/// rotations solved from cot equations, then rotates the residual unit scalar
/// to 1; degenerate slots skip their rotation.
FactorTriple decompose_classical(const QMat3& A, double membership_tol = 1e-9);

struct ClassicalReport {
  double reconstruction = 0;  // ||A1 A2 A1p - A||_F
  double fix1 = 0;            // ||A1 e1 - e1||
  double fix2 = 0;            // ||A2 e2 - e2||
  double fix1p = 0;           // ||A1p e1 - e1||
  double max_subgroup() const { return std::max(fix1, std::max(fix2, fix1p)); }
};
ClassicalReport verify_factors(const QMat3& A, const FactorTriple& t);

/// Haar-ish sampler: Gaussian + Gram-Schmidt with determinant fix (SO/SU),
/// quaternionic Gram-Schmidt for Sp.
QMat3 sample_group_matrix(Ring r, Rng& rng);

}  // namespace spinor

#endif
