#ifndef SPINOR_DECOMPOSE_HPP
#define SPINOR_DECOMPOSE_HPP

#include <set>
#include <string>
#include <vector>

#include "spinor/errors.hpp"
#include "spinor/generators.hpp"

namespace spinor {

// ---------------------------------------------------------------------------
// Reduction algorithms: any group element is factored by driving the image of
// the base point (E1 on the 27-dim spaces, the distinguished point on the
// 56-dim space) back to the base point with one-parameter subgroup moves, then
// reading the factors off the move word.
// ---------------------------------------------------------------------------

/// near-zero case classifier state; records margins so a failed verification
/// can retry along the sibling branch
struct DecisionLog {
  struct Entry {
    double value = 0, threshold = 0;
    bool taken_nonzero = false;
  };
  std::vector<Entry> entries;
  const std::set<int>* flips = nullptr;
  bool nonzero(double value, double threshold);
};

struct CaseTrace {
  std::vector<std::string> labels;
  double eps_case = 0;
  double final_residual = 0;
  std::string joined() const;
};

/// relative threshold for the exact-zero case distinctions
inline constexpr double kCaseEps = 1e-7;

// --- moves on the 27-dim spaces ---

/// word zeroing the x_k slot of X (four moves, some skipped)
Word clear_xslot(const JordanElement& X, int k);
/// word making the x_{k+2} slot real-octonion, for X with
/// xi_{k+1} = xi_{k+2} = 0 and x_k = 0
Word realify_second_spinor(const JordanElement& X, int k);

/// combined entry point: variant 1 clears the slot, variant 2 realifies
Word reduce_spinor_slot(const JordanElement& X, int variant, int k = 0);

/// reduce a real rank-1 trace-1 element to E1
Word reduce_orbit_f4(const JordanElement& X0, double tol, DecisionLog* log = nullptr);
/// reduce a rank-1 norm-1 element of the complex 27-dim space to E1
Word reduce_orbit_e6(const JordanElement& X0, double tol, DecisionLog* log = nullptr);

// --- moves on the 56-dim space ---

enum class PatternVariant { KeepEtaPair, KeepXiPair };

/// Standard: zero (xi_{k+1} slot, xi_{k+2} slot, x_k; y_k), leaving the
/// (eta_k, eta) pair; CaseIII: the mirror pattern (eta slots and y_k; x_k).
Word pattern_reduce(const FreudenthalPoint& P, int k, PatternVariant variant);

/// word sending a rank-1 norm-1 point in the special zero pattern to the
/// distinguished point
Word reduce_to_base_point(const FreudenthalPoint& P, int k, double tol);

/// full case tree; w(P0) = distinguished point
Word reduce_orbit_e7(const FreudenthalPoint& P0, double tol, CaseTrace& trace,
                  DecisionLog* log = nullptr);

// --- factor sequences ---

struct Factor {
  std::string label;  // e.g. "Spin1(12)"
  Word word;          // generator word whose product is op (may be empty for residuals)
  GroupOperator op;
};

struct FactorSequence {
  std::string group;  // "f4", "e6", "e7"
  std::vector<Factor> factors;
  CaseTrace trace;
};

FactorSequence decompose_f4(const GroupOperator& op, double tol = 1e-8);
FactorSequence decompose_e6(const GroupOperator& op, double tol = 1e-8);
FactorSequence decompose_e7(const GroupOperator& op, double tol = 1e-8);

struct DecompositionReport {
  double reconstruction = 0;
  std::vector<double> factor_membership;
  std::vector<double> factor_fix;
  bool label_pattern_ok = false;
  double max_membership() const;
};

DecompositionReport verify_decomposition(const GroupOperator& op, const FactorSequence& seq);

}  // namespace spinor

#endif
