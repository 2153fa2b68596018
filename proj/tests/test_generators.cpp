#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinor/generators.hpp"
#include "spinor/rng.hpp"

using namespace spinor;

namespace {
JordanElement random_jc(Rng& rng, bool real_form = false) {
  JordanElement X;
  for (int k = 0; k < 3; ++k) {
    X.xi[k] = real_form ? Cx(rng.normal(), 0) : rng.cx_normal();
    X.x[k] = real_form ? ComplexOctonion(rng.oct_normal()) : rng.coct_normal();
  }
  return X;
}

GenSpec random_alpha(Rng& rng, int k = 0) {
  return GenSpec::make(Family::Alpha, k, rng.oct_direction() * rng.uniform(0.1, M_PI));
}
}  // namespace

TEST_CASE("calibration finds exactly one profile per family") {
  for (Family f : {Family::Alpha, Family::Beta, Family::Gamma, Family::Delta}) {
    CAPTURE(family_name(f));
    CalibrationResult r = calibrate(f);
    CHECK(r.membership_residual <= 1e-9);
    CHECK(r.contract_residual <= 1e-9);
    CHECK(r.profile.order == 0);
    CHECK(r.profile.conj == 0);
    CHECK(r.profile.half == 0);
  }
  CHECK(calibrate(Family::Alpha).profile.sign2 == -1);
  CHECK(calibrate(Family::Alpha).profile.sign3 == 1);
}

TEST_CASE("sign-flipped template is rejected outright") {
  for (Family f : {Family::Alpha, Family::Beta, Family::Gamma, Family::Delta}) {
    CAPTURE(family_name(f));
    CHECK_THROWS_AS(calibrate(f, /*sabotage=*/true), NoProfileSatisfies);
  }
}

TEST_CASE("zero parameter gives the identity") {
  Rng rng(73);
  JordanElement X = random_jc(rng);
  GenSpec g = GenSpec::make(Family::Alpha, 0, Octonion{});
  CHECK((apply(g, X) - X).norm() == 0);
}

TEST_CASE("behavioral contracts of the first family") {
  Rng rng(79);
  for (int t = 0; t < 20; ++t) {
    JordanElement X = random_jc(rng, true);
    Octonion x1 = X.x[0].re();
    Octonion a = perp_direction({x1}) * (M_PI / 4);
    JordanElement X1 = apply(GenSpec::make(Family::Alpha, 0, a), X);
    CHECK(std::abs(X1.xi[1] - X1.xi[2]) < 1e-12 * X.norm());
    CHECK(std::abs(X1.xi[0] - X.xi[0]) < 1e-13);
    Octonion x1p = X1.x[0].re();
    if (x1p.norm() > 1e-9) {
      JordanElement X2 =
          apply(GenSpec::make(Family::Alpha, 0, x1p * ((M_PI / 4) / x1p.norm())), X1);
      CHECK(X2.x[0].norm() < 1e-12 * X.norm());
    }
  }
}

TEST_CASE("case swap: the quarter-turn moves the third slot into the second") {
  Rng rng(83);
  for (int t = 0; t < 100; ++t) {
    JordanElement X;
    X.xi[0] = rng.cx_normal();
    X.xi[1] = rng.cx_normal();
    X.x[2] = rng.coct_normal();
    JordanElement Z = apply(GenSpec::make(Family::Alpha, 0, Octonion::real(M_PI / 2)), X);
    CHECK(std::abs(Z.xi[1]) < 1e-13 * X.norm());
    CHECK(Z.x[2].norm() < 1e-13 * X.norm());
    CHECK(std::abs(Z.xi[2]) > 0);
    CHECK((Z.x[1].norm() > 0) == (X.x[2].norm() > 0));
  }
}

TEST_CASE("one-parameter group law within a fixed direction") {
  Rng rng(89);
  Octonion n = rng.oct_direction();
  for (Family f : {Family::Alpha, Family::Beta}) {
    double s = rng.uniform(0.1, 1.0), t = rng.uniform(0.1, 1.0);
    JordanElement X = random_jc(rng);
    JordanElement lhs = apply(GenSpec::make(f, 0, n * s), apply(GenSpec::make(f, 0, n * t), X));
    JordanElement rhs = apply(GenSpec::make(f, 0, n * (s + t)), X);
    CHECK((lhs - rhs).norm() <= 1e-10 * X.norm());
  }
  FreudenthalPoint P;
  P.X = random_jc(rng);
  P.Y = random_jc(rng);
  P.xi = rng.cx_normal();
  P.eta = rng.cx_normal();
  for (Family f : {Family::Gamma, Family::Delta}) {
    double s = rng.uniform(0.1, 1.0), t = rng.uniform(0.1, 1.0);
    FreudenthalPoint lhs = apply(GenSpec::make(f, 0, n * s), apply(GenSpec::make(f, 0, n * t), P));
    FreudenthalPoint rhs = apply(GenSpec::make(f, 0, n * (s + t)), P);
    CHECK((lhs - rhs).norm() <= 1e-10 * P.norm());
  }
}

TEST_CASE("unitarity of every family") {
  Rng rng(97);
  FreudenthalPoint P;
  P.X = random_jc(rng);
  P.Y = random_jc(rng);
  P.xi = rng.cx_normal();
  P.eta = rng.cx_normal();
  for (Family f : {Family::Alpha, Family::Beta, Family::Gamma, Family::Delta}) {
    GenSpec g = GenSpec::make(f, int(rng.below(3)), rng.oct_direction() * rng.uniform(0.1, M_PI));
    FreudenthalPoint Q = apply(g, P);
    CHECK(std::abs(inner_p(Q, Q) - inner_p(P, P)) <= 1e-10 * P.norm() * P.norm());
    // inverse words undo
    CHECK((apply(g.inverse(), Q) - P).norm() <= 1e-10 * P.norm());
  }
  GenSpec e1 = GenSpec::eps1(1, std::polar(1.0, rng.uniform(0, 2 * M_PI)));
  CHECK((apply(e1.inverse(), apply(e1, P)) - P).norm() <= 1e-12 * P.norm());
}

TEST_CASE("membership probes: positive and negative controls") {
  Rng rng(101);
  GroupOperator id27 = GroupOperator::identity(RepSpace::JC);
  CHECK(membership_residual(id27, "f4").residual == 0);
  CHECK(membership_residual(id27, "e6").residual == 0);

  GenSpec a2 = random_alpha(rng, 1);
  GroupOperator op = materialize(a2, RepSpace::JC);
  MembershipReport good = membership_residual(op, "spin2(9)");
  CHECK(good.residual <= 1e-10);
  CHECK(good.fix_residual <= 1e-10);
  MembershipReport bad = membership_residual(op, "spin1(9)");
  CHECK(bad.fix_residual > 0.1);  // generic slot-2 rotation moves E1

  // a non-member: transpose-free scaling breaks the cross law
  GroupOperator s = GroupOperator::identity(RepSpace::JC);
  s.m *= 1.1;
  CHECK(membership_residual(s, "f4").residual > 1e-2);
}

TEST_CASE("embeddings fix the distinguished point and commute with the slot maps") {
  Rng rng(103);
  GenSpec a1 = random_alpha(rng, 0);
  GroupOperator op27 = materialize(a1, RepSpace::JC);
  GroupOperator op56 = embed(op27, RepSpace::PC);
  FreudenthalPoint one = one_point();
  CHECK((op56.apply(one) - one).norm() <= 1e-12);
  MembershipReport rep = membership_residual(op56, "spin1(12)");
  CHECK(rep.residual <= 1e-9);
  CHECK(rep.fix_residual <= 1e-9);

  GenSpec e2 = GenSpec::eps2(1, rng.uniform(0, 2 * M_PI));
  GroupOperator eps56 = embed(materialize(e2, RepSpace::JC), RepSpace::PC);
  CHECK((eps56.apply(one) - one).norm() <= 1e-12);
  CHECK(membership_residual(eps56, "spin2(12)").fix_residual <= 1e-9);

  GroupOperator id = embed(GroupOperator::identity(RepSpace::JC), RepSpace::PC);
  CHECK((id.m - Eigen::MatrixXcd::Identity(56, 56)).norm() == 0);
}

TEST_CASE("subspace invariance of the slot-1 families") {
  Rng rng(107);
  for (int t = 0; t < 50; ++t) {
    GenSpec g = rng.below(2) == 0 ? GenSpec::make(Family::Beta, 0,
                                                  rng.oct_direction() * rng.uniform(0.1, M_PI))
                                  : random_alpha(rng, 0);
    JordanElement A;
    A.xi[0] = rng.cx_normal();
    A.xi[1] = rng.cx_normal();
    A.xi[2] = rng.cx_normal();
    A.x[0] = rng.coct_normal();
    JordanElement Ag = apply(g, A);
    CHECK(std::sqrt(Ag.x[1].norm2() + Ag.x[2].norm2()) <= 1e-10 * A.norm());
    JordanElement B;
    B.x[1] = rng.coct_normal();
    B.x[2] = rng.coct_normal();
    JordanElement Bg = apply(g, B);
    double leak = std::sqrt(std::norm(Bg.xi[0]) + std::norm(Bg.xi[1]) + std::norm(Bg.xi[2]) +
                            Bg.x[0].norm2());
    CHECK(leak <= 1e-10 * B.norm());
  }
}

TEST_CASE("rank-1 transport across mixed slots and families") {
  Rng rng(109);
  FreudenthalPoint P = one_point();
  for (int t = 0; t < 25; ++t) {
    Family fams[6] = {Family::Alpha, Family::Beta,  Family::Eps2,
                      Family::Gamma, Family::Delta, Family::Eps1};
    Family f = fams[rng.below(6)];
    int k = int(rng.below(3));
    GenSpec g = f == Family::Eps1   ? GenSpec::eps1(k, std::polar(1.0, rng.uniform(0, 2 * M_PI)))
                : f == Family::Eps2 ? GenSpec::eps2(k, rng.uniform(0, 2 * M_PI))
                                    : GenSpec::make(f, k, rng.oct_direction() * rng.uniform(0.1, M_PI));
    P = apply(g, P);
  }
  CHECK(rank1_max_residual(P) <= 1e-12);
  CHECK(std::abs(inner_p(P, P) - Cx(1, 0)) <= 1e-12);
}

TEST_CASE("materialized words multiply like applied words") {
  Rng rng(113);
  Word w;
  for (int i = 0; i < 5; ++i) w.push_back(random_alpha(rng, int(rng.below(3))));
  GroupOperator op = materialize_word(w, RepSpace::JC);
  JordanElement X = random_jc(rng);
  CHECK((op.apply(X) - apply_word(w, X)).norm() <= 1e-12 * X.norm());
  GroupOperator inv = materialize_word(inverse_word(w), RepSpace::JC);
  CHECK((op.m * inv.m - Eigen::MatrixXcd::Identity(27, 27)).norm() <= 1e-11);
}

TEST_CASE("constructed operators transport the rank-1 set on the 27-dim space") {
  Rng rng(127);
  Word w;
  for (int i = 0; i < 20; ++i) w.push_back(random_alpha(rng, int(rng.below(3))));
  GroupOperator op = materialize_word(w, RepSpace::J, "f4");
  JordanElement X = op.apply(JordanElement::diag_unit(0));
  CHECK(is_rank_one(X, 1e-9).rank_one);
  CHECK(std::abs(trace(X) - Cx(1, 0)) < 1e-10);
}
