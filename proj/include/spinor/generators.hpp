#ifndef SPINOR_GENERATORS_HPP
#define SPINOR_GENERATORS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinor/errors.hpp"
#include "spinor/freudenthal.hpp"

namespace spinor {

// ---------------------------------------------------------------------------
// One-parameter subgroup elements used as Givens-like moves:
//   alpha_k(a)  fixes E_k inside the 27-dim real representation,
//   beta_k(a)   the complex-twisted analog one level up,
//   gamma_k(a), delta_k(a)  act on the 56-dim space, commuting with
//   kappa_k and mu_k,
//   eps1_k(theta), eps2_k(t)  diagonal phase flows (exact closed forms).
// Parameters a are real octonions; k is 0-based in code, 1-based externally.
// ---------------------------------------------------------------------------

enum class Family { Alpha, Beta, Gamma, Delta, Eps1, Eps2 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

struct GenSpec {
  Family family = Family::Alpha;
  int k = 0;          // 0-based slot index
  Octonion a{};       // alpha/beta/gamma/delta parameter
  Cx theta{1, 0};     // eps1 parameter, |theta| = 1
  double t = 0;       // eps2 parameter

  static GenSpec make(Family f, int k, const Octonion& a);
  static GenSpec eps1(int k, Cx theta);
  static GenSpec eps2(int k, double t);

  GenSpec inverse() const;
};

using Word = std::vector<GenSpec>;
Word inverse_word(const Word& w);

// ---------------------------------------------------------------------------
// Convention profiles.  The closed forms carry a handful of discrete choices
// (octonion multiplication order and conjugation placement on the spinor
// slots, sign bits, half- vs full-angle) that the defining papers leave to a
// reference we do not pin textually; calibrate() sweeps them against the
// group-membership laws and the behavioral contracts the reductions rely on,
// unique survivor.
// ---------------------------------------------------------------------------

struct ConventionProfile {
  int order = 0;      // 0: left factor on slot k+1 pairing, as derived
  int conj = 0;       // 0: conjugated direction in the spinor products
  int sign2 = -1;     // alpha: sign on the first spinor slot (vector slaved to -sign2)
  int sign3 = +1;     // alpha: sign on the second spinor slot; beta/gamma/delta: relative sign
  int half = 0;       // 0: half-angle spinor action
  bool operator==(const ConventionProfile& o) const;
};

struct CalibrationResult {
  ConventionProfile profile;
  double membership_residual = 0;
  double contract_residual = 0;
};

struct CalibrationTable {
  CalibrationResult alpha, beta, gamma, delta;
};

/// Exhaustive sweep for one family; `sabotage` flips a sign outside the swept
/// space (negative control; expected to throw NoProfileSatisfies).
CalibrationResult calibrate(Family family, bool sabotage = false);

/// Process-wide calibration, computed once on first use (or loaded from the
/// file named by SPINOR_FACTOR_CALIBRATION when valid).
const CalibrationTable& calibration();

// ---------------------------------------------------------------------------
// Appliers.  J-level families (alpha, beta, eps2) act on JordanElement;
// every family acts on FreudenthalPoint (J-level families through the
// embedding (X, Y, xi, eta) -> (bX, tau b tau Y, xi, eta)).
// ---------------------------------------------------------------------------

/// real octonion of unit norm orthogonal to every vector in vs
Octonion perp_direction(const std::vector<Octonion>& vs);

JordanElement apply(const GenSpec& g, const JordanElement& X);
JordanElement apply(const GenSpec& g, const JordanElement& X, const ConventionProfile& p);
FreudenthalPoint apply(const GenSpec& g, const FreudenthalPoint& P);
FreudenthalPoint apply(const GenSpec& g, const FreudenthalPoint& P, const ConventionProfile& p);

JordanElement apply_word(const Word& w, JordanElement X);
FreudenthalPoint apply_word(const Word& w, FreudenthalPoint P);

// ---------------------------------------------------------------------------
// Dense operators.
// ---------------------------------------------------------------------------

enum class RepSpace { J, JC, PC };  // 27 real, 27 complex, 56 complex

struct GroupOperator {
  Eigen::MatrixXcd m;       // 27x27 or 56x56
  RepSpace space = RepSpace::JC;
  std::string claim;        // e.g. "f4", "e6", "e7", "spin1(9)", ...
  std::string provenance;   // "generators" or "external"

  int dim() const { return static_cast<int>(m.rows()); }
  static GroupOperator identity(RepSpace s, std::string claim = "");
  GroupOperator inverse() const;
  GroupOperator operator*(const GroupOperator& o) const;

  JordanElement apply(const JordanElement& X) const;
  FreudenthalPoint apply(const FreudenthalPoint& P) const;
};

/// materialize a generator (or word) as a dense operator on the given space
GroupOperator materialize(const GenSpec& g, RepSpace space);
GroupOperator materialize_word(const Word& w, RepSpace space, std::string claim = "");

/// E6 -> E7 embedding (X, Y, xi, eta) -> (bX, tau b tau Y, xi, eta);
/// J -> JC is the identity on matrices (complex extension of a real matrix).
GroupOperator embed(const GroupOperator& op, RepSpace to);

/// 56x56 matrices of kappa_k / mu_k in the frozen coordinate order
const Eigen::MatrixXcd& kappa_matrix(int k);
const Eigen::MatrixXcd& mu_matrix(int k);

// ---------------------------------------------------------------------------
// Membership residuals, evaluated on a deterministic probe set plus seeded
// random probes.
// ---------------------------------------------------------------------------

struct MembershipReport {
  double residual = 0;          // max over the claim's defining equations
  double fix_residual = 0;      // ||op E_k - E_k|| or commutators, when applicable
  bool pass(double tol) const { return residual <= tol && fix_residual <= tol; }
};

/// claims: "f4", "e6", "e7" (partial: inner product + rank-1 transport),
/// "spin{k}(9)", "spin{k}(10)", "spin{k}(12)" with k in 1..3
MembershipReport membership_residual(const GroupOperator& op, const std::string& claim,
                                     std::uint64_t probe_seed = 2024);

}  // namespace spinor

#endif
