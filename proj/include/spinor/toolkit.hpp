#ifndef SPINOR_TOOLKIT_HPP
#define SPINOR_TOOLKIT_HPP

#include <cstdint>
#include <vector>
#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "spinor/classical.hpp"
#include "spinor/decompose.hpp"

namespace spinor {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Seeded sampling.  Identical configs give bit-identical operators.
// ---------------------------------------------------------------------------

struct SampleConfig {
  std::string group;  // "so3", "su3", "sp3", "f4", "e6", "e7"
  int n_factors = 20;
  std::uint64_t seed = 0;
};

/// random generator word for the exceptional groups; parameters drawn as a
/// uniform direction on the unit sphere times a uniform angle in (0, pi)
Word sample_word(const SampleConfig& cfg);
GroupOperator sample_group_element(const SampleConfig& cfg);

struct RunReport {
  SampleConfig config;
  double reconstruction = 0;
  double max_membership = 0;
  std::vector<std::string> trace;
  double wall_seconds = 0;
};
json to_json(const RunReport& r);

// ---------------------------------------------------------------------------
// JSON schemas (all carry a "schema" field).
//   octonion: [8 numbers];  complexified: {"p": [8], "q": [8]}
//   quaternion: [4 numbers];  complex scalar: [re, im]
// ---------------------------------------------------------------------------

json to_json(const Octonion& o);
json to_json(const ComplexOctonion& o);
json to_json(const Quaternion& q);
json to_json(const JordanElement& X, bool real_form);
json to_json(const FreudenthalPoint& P);
json to_json(const GenSpec& g);
json to_json(const GroupOperator& op, const std::string& group);
json to_json(const QMat3& A);
json to_json(const FactorTriple& t, Ring ring);
json to_json(const FactorSequence& seq);

Octonion octonion_from_json(const json& j);
ComplexOctonion coctonion_from_json(const json& j);
Quaternion quaternion_from_json(const json& j);
JordanElement jordan_from_json(const json& j);
FreudenthalPoint fpoint_from_json(const json& j);
GenSpec genspec_from_json(const json& j);
GroupOperator operator_from_json(const json& j);
QMat3 qmat3_from_json(const json& j);
FactorTriple factor_triple_from_json(const json& j);
FactorSequence factors_from_json(const json& j);

json calibration_to_json(const CalibrationTable& t);

/// atomic write (temp file + rename)
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

// ---------------------------------------------------------------------------
// acceptance suite (shared by the test binary and the CLI selftest)
// ---------------------------------------------------------------------------

struct AcceptanceOptions {
  bool quick = false;  // reduced sample counts
};

/// Runs the acceptance criteria, printing one pass/fail line per criterion.
/// Returns the number of failed criteria.
int run_acceptance(std::ostream& out, const AcceptanceOptions& opt);

}  // namespace spinor

#endif
