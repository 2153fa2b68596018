#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <nlohmann/json.hpp>

#include "spinor/toolkit.hpp"

using namespace spinor;

namespace {

bool classical_group(const std::string& g) { return g == "so3" || g == "su3" || g == "sp3"; }

Ring ring_of(const std::string& g) {
  if (g == "so3") return Ring::Real;
  if (g == "su3") return Ring::Complex;
  return Ring::Quaternion;
}

int cmd_sample(const std::string& group, int n, std::uint64_t seed, const std::string& out) {
  json j;
  if (classical_group(group)) {
    Rng rng(seed);
    j = to_json(sample_group_matrix(ring_of(group), rng));
  } else {
    SampleConfig cfg{group, n, seed};
    GroupOperator op = sample_group_element(cfg);
    j = to_json(op, group);
  }
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out, j);
  }
  return 0;
}

int cmd_decompose(const std::string& group, const std::string& in, const std::string& out,
                  const std::string& trace_path, double tol) {
  auto t0 = std::chrono::steady_clock::now();
  json input = read_json_file(in);
  if (classical_group(group)) {
    QMat3 A = qmat3_from_json(input);
    if (std::string(ring_name(A.ring)) != ring_name(ring_of(group))) {
      std::cerr << "ring tag of the input does not match --group\n";
      return 2;
    }
    FactorTriple t = decompose_classical(A);
    ClassicalReport rep = verify_factors(A, t);
    std::cout << "reconstruction " << rep.reconstruction << ", subgroup residuals " << rep.fix1
              << " " << rep.fix2 << " " << rep.fix1p << "\n";
    if (!out.empty()) write_json_file(out, to_json(t, A.ring));
    return rep.reconstruction <= 1e-9 ? 0 : 1;
  }
  GroupOperator op = operator_from_json(input);
  FactorSequence seq;
  if (group == "f4") {
    seq = decompose_f4(op, tol);
  } else if (group == "e6") {
    seq = decompose_e6(op, tol);
  } else if (group == "e7") {
    seq = decompose_e7(op, tol);
  } else {
    std::cerr << "unknown group " << group << "\n";
    return 2;
  }
  DecompositionReport rep = verify_decomposition(op, seq);
  std::cout << seq.factors.size() << " factors";
  if (!seq.trace.labels.empty()) std::cout << ", case " << seq.trace.joined();
  std::cout << "\nreconstruction " << rep.reconstruction << ", max factor membership "
            << rep.max_membership() << "\n";
  if (!out.empty()) write_json_file(out, to_json(seq));
  if (!trace_path.empty()) {
    RunReport rr;
    rr.config.group = group;
    rr.reconstruction = rep.reconstruction;
    rr.max_membership = rep.max_membership();
    rr.trace = seq.trace.labels;
    rr.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json tr = to_json(rr);
    tr["eps_case"] = seq.trace.eps_case;
    tr["final_residual"] = seq.trace.final_residual;
    write_json_file(trace_path, tr);
  }
  return rep.reconstruction <= std::max(tol, 1e-6) * op.dim() ? 0 : 1;
}

int cmd_verify(const std::string& in, const std::string& factors, double tol) {
  json jin = read_json_file(in);
  json jfac = read_json_file(factors);
  if (jfac.at("schema") == "spinor-factor/triple/v1") {
    QMat3 A = qmat3_from_json(jin);
    FactorTriple t = factor_triple_from_json(jfac);
    ClassicalReport rep = verify_factors(A, t);
    std::cout << "reconstruction " << rep.reconstruction << ", subgroup residuals " << rep.fix1
              << " " << rep.fix2 << " " << rep.fix1p << "\n";
    return (rep.reconstruction <= 1e-9 && rep.max_subgroup() <= 1e-10) ? 0 : 1;
  }
  GroupOperator op = operator_from_json(jin);
  FactorSequence seq = factors_from_json(jfac);
  DecompositionReport rep = verify_decomposition(op, seq);
  std::cout << "reconstruction " << rep.reconstruction << "\n";
  for (size_t i = 0; i < seq.factors.size(); ++i) {
    std::cout << "factor " << i + 1 << " (" << seq.factors[i].label << "): membership "
              << rep.factor_membership[i] << ", fix " << rep.factor_fix[i] << "\n";
  }
  std::cout << "label pattern " << (rep.label_pattern_ok ? "ok" : "WRONG") << "\n";
  bool ok = rep.label_pattern_ok && rep.reconstruction <= std::max(tol, 1e-6) * op.dim() &&
            rep.max_membership() <= 1e-6;
  return ok ? 0 : 1;
}

int cmd_calibrate(const std::string& out) {
  const CalibrationTable& t = calibration();
  auto show = [](const char* name, const CalibrationResult& r) {
    std::cout << name << ": order=" << r.profile.order << " conj=" << r.profile.conj
              << " sign2=" << r.profile.sign2 << " sign3=" << r.profile.sign3
              << " half=" << r.profile.half << "  (membership " << r.membership_residual
              << ", contracts " << r.contract_residual << ")\n";
  };
  show("alpha", t.alpha);
  show("beta", t.beta);
  show("gamma", t.gamma);
  show("delta", t.delta);
  if (!out.empty()) {
    write_json_file(out, calibration_to_json(t));
    std::cout << "cache written to " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spinor-factor: factor elements of SO(3)/SU(3)/Sp(3) and of the compact exceptional "
      "groups F4, E6, E7 through their plane-rotation subgroups.\n"
      "Test-input sampling draws random generator words; whether such words reach every "
      "group element is a sampling-coverage question only and never affects the "
      "correctness of a returned factorization."};
  app.require_subcommand(1);

  std::string group, in, out, trace, factors;
  std::uint64_t seed = 0;
  int n = 20;
  double tol = 1e-8;
  bool quick = false;

  CLI::App* s = app.add_subcommand("sample", "sample a seeded group element");
  s->add_option("--group", group, "so3|su3|sp3|f4|e6|e7")->required();
  s->add_option("--n", n, "number of generator factors (exceptional groups)");
  s->add_option("--seed", seed, "64-bit seed");
  s->add_option("--out", out, "output JSON path (stdout when omitted)");

  CLI::App* d = app.add_subcommand("decompose", "factor an element through the plane subgroups");
  d->add_option("--group", group, "so3|su3|sp3|f4|e6|e7")->required();
  d->add_option("--in", in, "input element JSON")->required();
  d->add_option("--out", out, "factor file");
  d->add_option("--trace", trace, "case-trace file (e7)");
  d->add_option("--tol", tol, "verification tolerance");

  CLI::App* v = app.add_subcommand("verify", "check a factor file against an element");
  v->add_option("--in", in, "input element JSON")->required();
  v->add_option("--factors", factors, "factor file")->required();
  v->add_option("--tol", tol, "verification tolerance");

  CLI::App* c = app.add_subcommand("calibrate", "resolve the generator convention profiles");
  c->add_option("--out", out, "write the calibration cache (see SPINOR_FACTOR_CALIBRATION)");

  CLI::App* t = app.add_subcommand("selftest", "run the acceptance suite");
  t->add_flag("--quick", quick, "reduced sample counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s->parsed()) return cmd_sample(group, n, seed, out);
    if (d->parsed()) return cmd_decompose(group, in, out, trace, tol);
    if (v->parsed()) return cmd_verify(in, factors, tol);
    if (c->parsed()) return cmd_calibrate(out);
    if (t->parsed()) return run_acceptance(std::cout, {quick}) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
