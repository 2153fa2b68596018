#include "spinor/toolkit.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>

namespace spinor {

namespace {
constexpr const char* kOperatorSchema = "spinor-factor/operator/v1";
constexpr const char* kFactorsSchema = "spinor-factor/factors/v1";
constexpr const char* kMatrixSchema = "spinor-factor/matrix3/v1";
constexpr const char* kTripleSchema = "spinor-factor/triple/v1";
constexpr const char* kCalibSchema = "spinor-factor/calibration/v1";
constexpr const char* kBasis27 = "xi1,xi2,xi3,x1:e0..e7,x2:e0..e7,x3:e0..e7";
constexpr const char* kBasis56 = "X(27),Y(27),xi,eta";

json cx_json(Cx z) { return json::array({z.real(), z.imag()}); }
Cx cx_from(const json& j) {
  if (j.is_number()) return Cx(j.get<double>(), 0);
  return Cx(j.at(0).get<double>(), j.at(1).get<double>());
}
}  // namespace

Word sample_word(const SampleConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<Family> fams;
  if (cfg.group == "f4") {
    fams = {Family::Alpha};
  } else if (cfg.group == "e6") {
    fams = {Family::Alpha, Family::Beta, Family::Eps2};
  } else if (cfg.group == "e7") {
    fams = {Family::Alpha, Family::Beta, Family::Eps2, Family::Gamma, Family::Delta, Family::Eps1};
  } else {
    throw std::invalid_argument("sample_word: group must be f4, e6 or e7");
  }
  Word w;
  for (int i = 0; i < cfg.n_factors; ++i) {
    int k = static_cast<int>(rng.below(3));
    Family f = fams[rng.below(fams.size())];
    switch (f) {
      case Family::Eps1: w.push_back(GenSpec::eps1(k, std::polar(1.0, rng.uniform(0, 2 * M_PI)))); break;
      case Family::Eps2: w.push_back(GenSpec::eps2(k, rng.uniform(0, 2 * M_PI))); break;
      default: w.push_back(GenSpec::make(f, k, rng.oct_direction() * rng.uniform(0, M_PI))); break;
    }
  }
  return w;
}

GroupOperator sample_group_element(const SampleConfig& cfg) {
  Word w = sample_word(cfg);
  RepSpace space = cfg.group == "e7" ? RepSpace::PC : (cfg.group == "f4" ? RepSpace::J : RepSpace::JC);
  return materialize_word(w, space, cfg.group);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

json to_json(const RunReport& r) {
  return json{{"schema", "spinor-factor/run-report/v1"},
              {"config", {{"group", r.config.group}, {"n", r.config.n_factors}, {"seed", r.config.seed}}},
              {"reconstruction", r.reconstruction},
              {"max_membership", r.max_membership},
              {"trace", r.trace},
              {"wall_seconds", r.wall_seconds}};
}

json to_json(const Octonion& o) {
  json a = json::array();
  for (double v : o.c) a.push_back(v);
  return a;
}

json to_json(const ComplexOctonion& o) {
  return json{{"p", to_json(o.re())}, {"q", to_json(o.im())}};
}

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json to_json(const JordanElement& X, bool real_form) {
  json xi = json::array();
  json xs = json::array();
  for (int k = 0; k < 3; ++k) {
    xi.push_back(real_form ? json(X.xi[k].real()) : cx_json(X.xi[k]));
    xs.push_back(to_json(X.x[k]));
  }
  return json{{"xi", xi}, {"x", xs}, {"field", real_form ? "R" : "C"}};
}

json to_json(const FreudenthalPoint& P) {
  return json{{"X", to_json(P.X, false)},
              {"Y", to_json(P.Y, false)},
              {"xi", cx_json(P.xi)},
              {"eta", cx_json(P.eta)}};
}

json to_json(const GenSpec& g) {
  json j{{"family", family_name(g.family)}, {"k", g.k + 1}};
  switch (g.family) {
    case Family::Eps1: j["theta"] = cx_json(g.theta); break;
    case Family::Eps2: j["t"] = g.t; break;
    default: j["a"] = to_json(g.a); break;
  }
  return j;
}

json to_json(const GroupOperator& op, const std::string& group) {
  json rows = json::array();
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j) rows.push_back(cx_json(op.m(i, j)));
  return json{{"schema", kOperatorSchema},
              {"space", op.space == RepSpace::PC ? "P^C" : (op.space == RepSpace::J ? "J" : "J^C")},
              {"group", group},
              {"basis_version", op.space == RepSpace::PC ? kBasis56 : kBasis27},
              {"matrix", rows}};
}

json to_json(const QMat3& A) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Quaternion& q = A.at(i, j);
      switch (A.ring) {
        case Ring::Real: rows.push_back(q.w); break;
        case Ring::Complex: rows.push_back(json::array({q.w, q.x})); break;
        case Ring::Quaternion: rows.push_back(to_json(q)); break;
      }
    }
  return json{{"schema", kMatrixSchema}, {"ring", ring_name(A.ring)}, {"matrix", rows}};
}

json to_json(const FactorTriple& t, Ring) {
  return json{{"schema", kTripleSchema},
              {"labels", json::array({"fixes-e1", "fixes-e2", "fixes-e1"})},
              {"factors", json::array({to_json(t.A1), to_json(t.A2), to_json(t.A1p)})}};
}

json to_json(const FactorSequence& seq) {
  json fs = json::array();
  for (const Factor& f : seq.factors) {
    json w = json::array();
    for (const GenSpec& g : f.word) w.push_back(to_json(g));
    fs.push_back(json{{"label", f.label}, {"word", w}, {"matrix", to_json(f.op, seq.group)}});
  }
  json tr = json::array();
  for (const std::string& s : seq.trace.labels) tr.push_back(s);
  return json{{"schema", kFactorsSchema}, {"group", seq.group}, {"factors", fs}, {"trace", tr}};
}

Octonion octonion_from_json(const json& j) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o[i] = j.at(i).get<double>();
  return o;
}

ComplexOctonion coctonion_from_json(const json& j) {
  if (j.is_array()) return ComplexOctonion(octonion_from_json(j));
  return ComplexOctonion(octonion_from_json(j.at("p")), octonion_from_json(j.at("q")));
}

Quaternion quaternion_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
          j.at(3).get<double>()};
}

JordanElement jordan_from_json(const json& j) {
  JordanElement X;
  for (int k = 0; k < 3; ++k) {
    X.xi[k] = cx_from(j.at("xi").at(k));
    X.x[k] = coctonion_from_json(j.at("x").at(k));
  }
  return X;
}

FreudenthalPoint fpoint_from_json(const json& j) {
  FreudenthalPoint P;
  P.X = jordan_from_json(j.at("X"));
  P.Y = jordan_from_json(j.at("Y"));
  P.xi = cx_from(j.at("xi"));
  P.eta = cx_from(j.at("eta"));
  return P;
}

GenSpec genspec_from_json(const json& j) {
  auto f = family_from_name(j.at("family").get<std::string>());
  if (!f) throw std::invalid_argument("unknown generator family");
  int k = j.at("k").get<int>() - 1;
  switch (*f) {
    case Family::Eps1: return GenSpec::eps1(k, cx_from(j.at("theta")));
    case Family::Eps2: return GenSpec::eps2(k, j.at("t").get<double>());
    default: return GenSpec::make(*f, k, octonion_from_json(j.at("a")));
  }
}

GroupOperator operator_from_json(const json& j) {
  GroupOperator op;
  std::string space = j.at("space").get<std::string>();
  op.space = space == "P^C" ? RepSpace::PC : (space == "J" ? RepSpace::J : RepSpace::JC);
  op.provenance = "external";
  op.claim = j.value("group", "");
  int n = op.space == RepSpace::PC ? 56 : 27;
  op.m.resize(n, n);
  const json& rows = j.at("matrix");
  if (static_cast<int>(rows.size()) != n * n) throw std::invalid_argument("matrix size mismatch");
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) op.m(i, jj) = cx_from(rows.at(i * n + jj));
  return op;
}

QMat3 qmat3_from_json(const json& j) {
  QMat3 A;
  std::string ring = j.at("ring").get<std::string>();
  A.ring = ring == "real" ? Ring::Real : (ring == "complex" ? Ring::Complex : Ring::Quaternion);
  const json& rows = j.at("matrix");
  for (int i = 0; i < 9; ++i) {
    const json& e = rows.at(i);
    switch (A.ring) {
      case Ring::Real: A.m[i] = Quaternion::real(e.get<double>()); break;
      case Ring::Complex: A.m[i] = Quaternion{e.at(0).get<double>(), e.at(1).get<double>(), 0, 0}; break;
      case Ring::Quaternion: A.m[i] = quaternion_from_json(e); break;
    }
  }
  return A;
}

FactorTriple factor_triple_from_json(const json& j) {
  FactorTriple t;
  t.A1 = qmat3_from_json(j.at("factors").at(0));
  t.A2 = qmat3_from_json(j.at("factors").at(1));
  t.A1p = qmat3_from_json(j.at("factors").at(2));
  return t;
}

FactorSequence factors_from_json(const json& j) {
  FactorSequence seq;
  seq.group = j.at("group").get<std::string>();
  for (const json& f : j.at("factors")) {
    Factor fac;
    fac.label = f.at("label").get<std::string>();
    for (const json& g : f.at("word")) fac.word.push_back(genspec_from_json(g));
    fac.op = operator_from_json(f.at("matrix"));
    seq.factors.push_back(std::move(fac));
  }
  if (j.contains("trace"))
    for (const json& s : j.at("trace")) seq.trace.labels.push_back(s.get<std::string>());
  return seq;
}

json calibration_to_json(const CalibrationTable& t) {
  auto one = [](const CalibrationResult& r) {
    return json{{"order", r.profile.order},     {"conj", r.profile.conj},
                {"sign2", r.profile.sign2},     {"sign3", r.profile.sign3},
                {"half", r.profile.half},       {"membership_residual", r.membership_residual},
                {"contract_residual", r.contract_residual}};
  };
  return json{{"schema", kCalibSchema},
              {"families",
               {{"alpha", one(t.alpha)},
                {"beta", one(t.beta)},
                {"gamma", one(t.gamma)},
                {"delta", one(t.delta)}}}};
}

void write_json_file(const std::string& path, const json& j) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << j.dump(2) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename into " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

// ---------------------------------------------------------------------------
// acceptance suite
// ---------------------------------------------------------------------------

namespace {

struct Criterion {
  std::string name;
  bool pass = false;
  double worst = 0;
  double seconds = 0;
};

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Criterion crit_composition(const AcceptanceOptions& opt) {
  Criterion c{"composition algebra: |ab| = |a||b|, alternativity, witness"};
  auto t0 = Clock::now();
  Rng rng(101);
  int n = opt.quick ? 1000 : 10000;
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    Octonion a = rng.oct_normal(), b = rng.oct_normal();
    worst = std::max(worst, std::abs(oct_mul(a, b).norm() - a.norm() * b.norm()));
    worst = std::max(worst, (oct_mul(a, oct_mul(a, b)) - oct_mul(oct_mul(a, a), b)).norm());
    worst = std::max(worst, (oct_mul(oct_mul(b, a), a) - oct_mul(b, oct_mul(a, a))).norm());
  }
  Octonion w1 = oct_mul(oct_mul(Octonion::unit(1), Octonion::unit(2)), Octonion::unit(4));
  Octonion w2 = oct_mul(Octonion::unit(1), oct_mul(Octonion::unit(2), Octonion::unit(4)));
  bool witness = (w1 - Octonion::unit(7)).norm() == 0 && (w2 + Octonion::unit(7)).norm() == 0;
  c.worst = worst;
  c.pass = worst <= 1e-12 && witness;
  c.seconds = elapsed(t0);
  return c;
}

Criterion crit_classical(const AcceptanceOptions& opt) {
  Criterion c{"SO(3)/SU(3)/Sp(3): 1000 each, subgroup <= 1e-12, recon <= 1e-10"};
  auto t0 = Clock::now();
  int n = opt.quick ? 100 : 1000;
  double worst_rec = 0, worst_sub = 0;
  std::uint64_t seed = 5000;
  for (Ring ring : {Ring::Real, Ring::Complex, Ring::Quaternion}) {
    for (int i = 0; i < n; ++i) {
      Rng rng(seed++);
      QMat3 A = sample_group_matrix(ring, rng);
      FactorTriple t = decompose_classical(A);
      ClassicalReport rep = verify_factors(A, t);
      worst_rec = std::max(worst_rec, rep.reconstruction);
      worst_sub = std::max(worst_sub, rep.max_subgroup());
    }
  }
  c.worst = std::max(worst_rec, worst_sub);
  c.pass = worst_rec <= 1e-10 && worst_sub <= 1e-12;
  c.seconds = elapsed(t0);
  return c;
}

Criterion crit_calibration(const AcceptanceOptions&) {
  Criterion c{"calibration: unique profile per family; sabotage control fails"};
  auto t0 = Clock::now();
  bool ok = true;
  double worst = 0;
  for (Family f : {Family::Alpha, Family::Beta, Family::Gamma, Family::Delta}) {
    try {
      CalibrationResult r = calibrate(f);
      worst = std::max(worst, std::max(r.membership_residual, r.contract_residual));
    } catch (const std::exception&) {
      ok = false;
    }
    try {
      calibrate(f, /*sabotage=*/true);
      ok = false;  // the control must fail
    } catch (const NoProfileSatisfies&) {
    }
  }
  c.worst = worst;
  c.pass = ok;
  c.seconds = elapsed(t0);
  return c;
}

Criterion crit_generator_laws(const AcceptanceOptions&) {
  Criterion c{"eps1/eps2 closed forms + group laws; kappa1/mu1 component forms"};
  auto t0 = Clock::now();
  double worst = 0;

  // slot-1 component forms on every basis vector (exact dyadic arithmetic)
  for (int i = 0; i < 56; ++i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(56);
    v(i) = 1;
    FreudenthalPoint P = FreudenthalPoint::from_coords(v);
    FreudenthalPoint K = kappa(0, P);
    FreudenthalPoint Kp;  // component form of kappa_1
    Kp.X.xi = {-P.X.xi[0], P.X.xi[1], P.X.xi[2]};
    Kp.X.x[0] = P.X.x[0];
    Kp.Y.xi = {P.Y.xi[0], -P.Y.xi[1], -P.Y.xi[2]};
    Kp.Y.x[0] = -P.Y.x[0];
    Kp.xi = -P.xi;
    Kp.eta = P.eta;
    worst = std::max(worst, (K - Kp).norm());
    FreudenthalPoint M = mu(0, P);
    FreudenthalPoint Mp;  // component form of mu_1
    Mp.X.xi = {P.eta, P.Y.xi[2], P.Y.xi[1]};
    Mp.X.x[0] = -P.Y.x[0];
    Mp.Y.xi = {P.xi, P.X.xi[2], P.X.xi[1]};
    Mp.Y.x[0] = -P.X.x[0];
    Mp.xi = P.Y.xi[0];
    Mp.eta = P.X.xi[0];
    worst = std::max(worst, (M - Mp).norm());
    // the imaginary basis sweep doubles the 56 to the 112 real directions
    FreudenthalPoint Pi = FreudenthalPoint::from_coords(v * Cx(0, 1));
    worst = std::max(worst, (kappa(0, Pi).coords() - K.coords() * Cx(0, 1)).norm());
    worst = std::max(worst, (mu(0, Pi).coords() - M.coords() * Cx(0, 1)).norm());
  }

  // eps2 component form on basis vectors
  double t = 0.77;
  Cx e = std::polar(1.0, t), eh = std::polar(1.0, t / 2);
  for (int i = 0; i < 27; ++i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(27);
    v(i) = 1;
    JordanElement X = JordanElement::from_coords(v);
    JordanElement Z = apply(GenSpec::eps2(1, t), X);
    JordanElement Zp = X;
    Zp.xi[0] = e * X.xi[0];
    Zp.xi[2] = std::conj(e) * X.xi[2];
    Zp.x[0] = std::conj(eh) * X.x[0];
    Zp.x[2] = eh * X.x[2];
    worst = std::max(worst, (Z - Zp).norm());
  }
  // eps1 component form on basis vectors
  Cx th = std::polar(1.0, 0.41), ti = Cx(1, 0) / th;
  for (int i = 0; i < 56; ++i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(56);
    v(i) = 1;
    FreudenthalPoint P = FreudenthalPoint::from_coords(v);
    FreudenthalPoint Z = apply(GenSpec::eps1(0, th), P);
    FreudenthalPoint Zp = P;
    Zp.X.xi[0] = ti * ti * P.X.xi[0];
    Zp.X.x[1] = ti * P.X.x[1];
    Zp.X.x[2] = ti * P.X.x[2];
    Zp.Y.xi[0] = th * th * P.Y.xi[0];
    Zp.Y.x[1] = th * P.Y.x[1];
    Zp.Y.x[2] = th * P.Y.x[2];
    Zp.xi = th * th * P.xi;
    Zp.eta = ti * ti * P.eta;
    worst = std::max(worst, (Z - Zp).norm());
  }

  // one-parameter group laws
  Rng rng(303);
  for (int i = 0; i < 20; ++i) {
    double s = rng.uniform(0, 2 * M_PI), u = rng.uniform(0, 2 * M_PI);
    JordanElement X = JordanElement::from_coords(Eigen::VectorXcd::Random(27));
    JordanElement lhs = apply(GenSpec::eps2(1, s), apply(GenSpec::eps2(1, u), X));
    JordanElement rhs = apply(GenSpec::eps2(1, s + u), X);
    worst = std::max(worst, (lhs - rhs).norm() / X.norm());
    Cx t1 = std::polar(1.0, rng.uniform(0, 2 * M_PI)), t2 = std::polar(1.0, rng.uniform(0, 2 * M_PI));
    FreudenthalPoint P = FreudenthalPoint::from_coords(Eigen::VectorXcd::Random(56));
    FreudenthalPoint l2 = apply(GenSpec::eps1(0, t1), apply(GenSpec::eps1(0, t2), P));
    FreudenthalPoint r2 = apply(GenSpec::eps1(0, t1 * t2), P);
    worst = std::max(worst, (l2 - r2).norm() / P.norm());
  }
  c.worst = worst;
  c.pass = worst <= 1e-10;
  c.seconds = elapsed(t0);
  return c;
}

Criterion crit_f4(const AcceptanceOptions& opt) {
  Criterion c{"F4: 1000 seeded elements -> 3 factors, fix <= 1e-8, recon <= 1e-7"};
  auto t0 = Clock::now();
  int n = opt.quick ? 50 : 1000;
  double worst_rec = 0, worst_fix = 0;
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    SampleConfig cfg{"f4", 20, 9000 + static_cast<std::uint64_t>(i)};
    GroupOperator op = sample_group_element(cfg);
    FactorSequence seq = decompose_f4(op);
    ok = ok && seq.factors.size() == 3;
    Eigen::MatrixXcd prod = seq.factors[0].op.m * seq.factors[1].op.m * seq.factors[2].op.m;
    worst_rec = std::max(worst_rec, (prod - op.m).norm());
    JordanElement E1 = JordanElement::diag_unit(0), E2 = JordanElement::diag_unit(1);
    worst_fix = std::max(worst_fix, (seq.factors[0].op.apply(E1) - E1).norm());
    worst_fix = std::max(worst_fix, (seq.factors[1].op.apply(E2) - E2).norm());
    worst_fix = std::max(worst_fix, (seq.factors[2].op.apply(E1) - E1).norm());
  }
  c.worst = std::max(worst_rec, worst_fix);
  c.pass = ok && worst_rec <= 1e-7 && worst_fix <= 1e-8;
  c.seconds = elapsed(t0);
  return c;
}

Criterion crit_e6(const AcceptanceOptions& opt) {
  Criterion c{"E6: 500 seeded elements -> 3 factors, membership <= 1e-8, recon <= 1e-7"};
  auto t0 = Clock::now();
  int n = opt.quick ? 30 : 500;
  double worst_rec = 0, worst_mem = 0;
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    SampleConfig cfg{"e6", 20, 11000 + static_cast<std::uint64_t>(i)};
    GroupOperator op = sample_group_element(cfg);
    FactorSequence seq = decompose_e6(op);
    ok = ok && seq.factors.size() == 3;
    Eigen::MatrixXcd prod = seq.factors[0].op.m * seq.factors[1].op.m * seq.factors[2].op.m;
    worst_rec = std::max(worst_rec, (prod - op.m).norm());
    if (i % 25 == 0) {
      for (const Factor& f : seq.factors) {
        std::string claim = f.label;
        for (char& ch : claim) ch = char(std::tolower(ch));
        MembershipReport m = membership_residual(f.op, claim);
        worst_mem = std::max(worst_mem, std::max(m.residual, m.fix_residual));
      }
    }
  }
  c.worst = std::max(worst_rec, worst_mem);
  c.pass = ok && worst_rec <= 1e-7 && worst_mem <= 1e-8;
  c.seconds = elapsed(t0);
  return c;
}

Criterion crit_e7(const AcceptanceOptions& opt, std::ostream& out) {
  Criterion c{"E7: 300 seeded elements -> 5 factors 1-2-1-2-1, recon <= 1e-6"};
  auto t0 = Clock::now();
  int n = opt.quick ? 20 : 300;
  double worst_rec = 0, worst_comm = 0;
  bool ok = true;
  std::map<std::string, int> traces;
  for (int i = 0; i < n; ++i) {
    SampleConfig cfg{"e7", 20, 13000 + static_cast<std::uint64_t>(i)};
    GroupOperator op = sample_group_element(cfg);
    FactorSequence seq = decompose_e7(op);
    ok = ok && seq.factors.size() == 5;
    traces[seq.trace.joined()]++;
    Eigen::MatrixXcd prod = seq.factors[0].op.m;
    for (size_t f = 1; f < seq.factors.size(); ++f) prod = prod * seq.factors[f].op.m;
    worst_rec = std::max(worst_rec, (prod - op.m).norm());
    std::vector<int> want{0, 1, 0, 1, 0};
    for (size_t f = 0; f < seq.factors.size(); ++f) {
      int slot = want[f];
      const auto& K = kappa_matrix(slot);
      const auto& M = mu_matrix(slot);
      const auto& A = seq.factors[f].op.m;
      worst_comm = std::max(worst_comm, (A * K - K * A).norm() / 56.0);
      worst_comm = std::max(worst_comm, (A * M - M * A).norm() / 56.0);
      ok = ok && seq.factors[f].label == ("Spin" + std::to_string(slot + 1) + "(12)");
    }
  }
  out << "  case-trace distribution over " << n << " seeded runs:\n";
  for (const auto& [k, v] : traces) out << "    " << v << "  " << k << "\n";
  c.worst = std::max(worst_rec, worst_comm);
  c.pass = ok && worst_rec <= 1e-6 && worst_comm <= 1e-7;
  c.seconds = elapsed(t0);
  return c;
}

Criterion crit_rank1(const AcceptanceOptions& opt) {
  Criterion c{"rank-1 identities: 500 transported points <= 1e-9; counterexample = 1"};
  auto t0 = Clock::now();
  int n = opt.quick ? 50 : 500;
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    SampleConfig cfg{"e7", 12, 17000 + static_cast<std::uint64_t>(i)};
    Word w = sample_word(cfg);
    FreudenthalPoint P = apply_word(w, one_point());
    worst = std::max(worst, rank1_max_residual(P));
  }
  FreudenthalPoint counter;
  counter.X = JordanElement::identity();
  auto r = rank1_residuals(counter);
  bool counter_ok = r[1] == 1.0;  // identity (2) is violated by exactly 1
  c.worst = worst;
  c.pass = worst <= 1e-9 && counter_ok;
  c.seconds = elapsed(t0);
  return c;
}

Criterion crit_invariant_subspaces(const AcceptanceOptions& opt) {
  Criterion c{"invariant subspaces preserved, leakage <= 1e-10"};
  auto t0 = Clock::now();
  int n = opt.quick ? 20 : 100;
  double worst = 0;
  Rng rng(919);
  for (int i = 0; i < n; ++i) {
    // 27-dim: {(xi1,xi2,xi3;x1,0,0)} and {(0,0,0;0,x2,x3)} under slot-1 movers
    GenSpec g = rng.below(2) == 0
                    ? GenSpec::make(Family::Alpha, 0, rng.oct_direction() * rng.uniform(0.1, M_PI))
                    : GenSpec::make(Family::Beta, 0, rng.oct_direction() * rng.uniform(0.1, M_PI));
    JordanElement A;
    for (int k = 0; k < 3; ++k) A.xi[k] = rng.cx_normal();
    A.x[0] = rng.coct_normal();
    JordanElement Ag = apply(g, A);
    worst = std::max(worst, std::sqrt(Ag.x[1].norm2() + Ag.x[2].norm2()));
    JordanElement B;
    B.x[1] = rng.coct_normal();
    B.x[2] = rng.coct_normal();
    JordanElement Bg = apply(g, B);
    double leak = std::sqrt(std::norm(Bg.xi[0]) + std::norm(Bg.xi[1]) + std::norm(Bg.xi[2]) +
                            Bg.x[0].norm2());
    worst = std::max(worst, leak);
    // 56-dim: the three invariant blocks under the slot-1 families
    Family fams[5] = {Family::Alpha, Family::Beta, Family::Gamma, Family::Delta, Family::Eps1};
    Family f = fams[rng.below(5)];
    GenSpec gp = f == Family::Eps1
                     ? GenSpec::eps1(0, std::polar(1.0, rng.uniform(0, 2 * M_PI)))
                     : GenSpec::make(f, 0, rng.oct_direction() * rng.uniform(0.1, M_PI));
    FreudenthalPoint P1;  // ((xi1,0,0;0,0,0),(0,eta2,eta3;y1,0,0),xi,0)
    P1.X.xi[0] = rng.cx_normal();
    P1.Y.xi[1] = rng.cx_normal();
    P1.Y.xi[2] = rng.cx_normal();
    P1.Y.x[0] = rng.coct_normal();
    P1.xi = rng.cx_normal();
    FreudenthalPoint Q = apply(gp, P1);
    Q.X.xi[0] = 0;
    Q.Y.xi[1] = 0;
    Q.Y.xi[2] = 0;
    Q.Y.x[0] = ComplexOctonion{};
    Q.xi = 0;
    worst = std::max(worst, Q.norm());
    FreudenthalPoint P2;  // ((0,xi2,xi3;x1,0,0),(eta1,0,0;0,0,0),0,eta)
    P2.X.xi[1] = rng.cx_normal();
    P2.X.xi[2] = rng.cx_normal();
    P2.X.x[0] = rng.coct_normal();
    P2.Y.xi[0] = rng.cx_normal();
    P2.eta = rng.cx_normal();
    Q = apply(gp, P2);
    Q.X.xi[1] = 0;
    Q.X.xi[2] = 0;
    Q.X.x[0] = ComplexOctonion{};
    Q.Y.xi[0] = 0;
    Q.eta = 0;
    worst = std::max(worst, Q.norm());
    FreudenthalPoint P3;  // ((0,0,0;0,x2,x3),(0,0,0;0,y2,y3),0,0)
    P3.X.x[1] = rng.coct_normal();
    P3.X.x[2] = rng.coct_normal();
    P3.Y.x[1] = rng.coct_normal();
    P3.Y.x[2] = rng.coct_normal();
    Q = apply(gp, P3);
    Q.X.x[1] = Q.X.x[2] = Q.Y.x[1] = Q.Y.x[2] = ComplexOctonion{};
    worst = std::max(worst, Q.norm());
  }
  c.worst = worst;
  c.pass = worst <= 1e-10;
  c.seconds = elapsed(t0);
  return c;
}

}  // namespace

int run_acceptance(std::ostream& out, const AcceptanceOptions& opt) {
  std::vector<Criterion> results;
  out << "acceptance suite" << (opt.quick ? " (quick)" : "") << "\n";
  auto guarded = [&](auto&& fn, double seconds_budget) {
    Criterion c;
    try {
      c = fn();
      if (!opt.quick && c.seconds > seconds_budget) c.pass = false;
    } catch (const std::exception& e) {
      c.name = std::string("exception: ") + e.what();
      c.pass = false;
    }
    results.push_back(c);
  };
  guarded([&] { return crit_composition(opt); }, 1.0);
  guarded([&] { return crit_classical(opt); }, 5.0);
  guarded([&] { return crit_calibration(opt); }, 30.0);
  guarded([&] { return crit_generator_laws(opt); }, 60.0);
  guarded([&] { return crit_f4(opt); }, 60.0);
  guarded([&] { return crit_e6(opt); }, 60.0);
  guarded([&] { return crit_e7(opt, out); }, 300.0);
  guarded([&] { return crit_rank1(opt); }, 60.0);
  guarded([&] { return crit_invariant_subspaces(opt); }, 60.0);
  int failed = 0;
  char buf[256];
  for (size_t i = 0; i < results.size(); ++i) {
    const Criterion& c = results[i];
    std::snprintf(buf, sizeof(buf), "[%s] %zu. %-72s worst %.2e  (%.2fs)",
                  c.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(), c.worst, c.seconds);
    out << buf << "\n";
    if (!c.pass) ++failed;
  }
  out << (failed == 0 ? "all criteria passed\n" : "some criteria FAILED\n");
  return failed;
}

}  // namespace spinor
