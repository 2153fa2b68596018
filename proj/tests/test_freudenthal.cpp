#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinor/freudenthal.hpp"
#include "spinor/rng.hpp"

using namespace spinor;

namespace {
FreudenthalPoint random_pc(Rng& rng) {
  FreudenthalPoint P;
  for (int k = 0; k < 3; ++k) {
    P.X.xi[k] = rng.cx_normal();
    P.X.x[k] = rng.coct_normal();
    P.Y.xi[k] = rng.cx_normal();
    P.Y.x[k] = rng.coct_normal();
  }
  P.xi = rng.cx_normal();
  P.eta = rng.cx_normal();
  return P;
}
}  // namespace

TEST_CASE("kappa and mu reproduce their slot-1 component forms") {
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    FreudenthalPoint P = random_pc(rng);
    FreudenthalPoint K = kappa(0, P);
    CHECK(std::abs(K.X.xi[0] + P.X.xi[0]) < 1e-13);
    CHECK(std::abs(K.X.xi[1] - P.X.xi[1]) < 1e-13);
    CHECK(std::abs(K.X.xi[2] - P.X.xi[2]) < 1e-13);
    CHECK((K.X.x[0] - P.X.x[0]).norm() < 1e-13);
    CHECK(K.X.x[1].norm() < 1e-13);
    CHECK(K.X.x[2].norm() < 1e-13);
    CHECK(std::abs(K.Y.xi[0] - P.Y.xi[0]) < 1e-13);
    CHECK(std::abs(K.Y.xi[1] + P.Y.xi[1]) < 1e-13);
    CHECK(std::abs(K.Y.xi[2] + P.Y.xi[2]) < 1e-13);
    CHECK((K.Y.x[0] + P.Y.x[0]).norm() < 1e-13);
    CHECK(std::abs(K.xi + P.xi) < 1e-13);
    CHECK(std::abs(K.eta - P.eta) < 1e-13);

    FreudenthalPoint M = mu(0, P);
    CHECK(std::abs(M.X.xi[0] - P.eta) < 1e-13);
    CHECK(std::abs(M.X.xi[1] - P.Y.xi[2]) < 1e-13);
    CHECK(std::abs(M.X.xi[2] - P.Y.xi[1]) < 1e-13);
    CHECK((M.X.x[0] + P.Y.x[0]).norm() < 1e-13);
    CHECK(std::abs(M.Y.xi[0] - P.xi) < 1e-13);
    CHECK(std::abs(M.Y.xi[1] - P.X.xi[2]) < 1e-13);
    CHECK(std::abs(M.Y.xi[2] - P.X.xi[1]) < 1e-13);
    CHECK((M.Y.x[0] + P.X.x[0]).norm() < 1e-13);
    CHECK(std::abs(M.xi - P.Y.xi[0]) < 1e-13);
    CHECK(std::abs(M.eta - P.X.xi[0]) < 1e-13);
  }
}

TEST_CASE("kappa/mu on the distinguished point") {
  FreudenthalPoint one = one_point();
  CHECK((kappa(0, one) - one).norm() == 0);
  FreudenthalPoint M = mu(0, one);
  FreudenthalPoint expect;
  expect.X = JordanElement::diag_unit(0);
  CHECK((M - expect).norm() == 0);
  // applying mu twice returns to the distinguished point (frozen regression)
  CHECK((mu(0, M) - one).norm() == 0);
}

TEST_CASE("kappa eigenstructure splits the three invariant blocks") {
  // the slot-1 maps act as -1, +1, 0 on the three invariant subspaces
  Rng rng(59);
  FreudenthalPoint V;  // ((xi1,0,0;0,0,0),(0,eta2,eta3;y1,0,0),xi,0)
  V.X.xi[0] = rng.cx_normal();
  V.Y.xi[1] = rng.cx_normal();
  V.Y.xi[2] = rng.cx_normal();
  V.Y.x[0] = rng.coct_normal();
  V.xi = rng.cx_normal();
  CHECK((kappa(0, V) + V).norm() < 1e-13);
  FreudenthalPoint Vp;  // ((0,xi2,xi3;x1,0,0),(eta1,0,0;0,0,0),0,eta)
  Vp.X.xi[1] = rng.cx_normal();
  Vp.X.xi[2] = rng.cx_normal();
  Vp.X.x[0] = rng.coct_normal();
  Vp.Y.xi[0] = rng.cx_normal();
  Vp.eta = rng.cx_normal();
  CHECK((kappa(0, Vp) - Vp).norm() < 1e-13);
  FreudenthalPoint S;  // spinor block
  S.X.x[1] = rng.coct_normal();
  S.X.x[2] = rng.coct_normal();
  S.Y.x[1] = rng.coct_normal();
  S.Y.x[2] = rng.coct_normal();
  CHECK(kappa(0, S).norm() == 0);
  CHECK(mu(0, S).norm() == 0);
}

TEST_CASE("inner product") {
  FreudenthalPoint one = one_point();
  CHECK(inner_p(one, one) == Cx(1, 0));
  FreudenthalPoint Q;
  Q.X = JordanElement::diag_unit(0);
  CHECK(inner_p(one, Q) == Cx(0, 0));
  FreudenthalPoint R;
  R.eta = Cx(0, 2);
  CHECK(inner_p(R, R) == Cx(4, 0));
  Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    FreudenthalPoint P = random_pc(rng);
    CHECK(inner_p(P, P).real() >= 0);
    CHECK(std::abs(inner_p(P, P).imag()) < 1e-12 * P.norm() * P.norm());
  }
}

TEST_CASE("the seventeen identities") {
  auto r = rank1_residuals(one_point());
  for (double v : r) CHECK(v == 0);
  FreudenthalPoint counter;
  counter.X = JordanElement::identity();
  auto rc = rank1_residuals(counter);
  CHECK(rc[1] == 1.0);  // identity (2) violated by exactly 1
}

TEST_CASE("cone points are rank-1 and reconstruct") {
  Rng rng(67);
  for (int t = 0; t < 30; ++t) {
    JordanElement X;
    for (int k = 0; k < 3; ++k) {
      X.xi[k] = rng.cx_normal();
      X.x[k] = rng.coct_normal();
    }
    X = X * Cx(0.6 / X.norm());
    FreudenthalPoint C = cone_point(X, rng.cx_normal());
    CHECK(rank1_max_residual(C) <= 1e-12 * std::max(1.0, C.norm() * C.norm()));
    if (std::abs(C.eta) > 0.05) CHECK(cone_residual(C) <= 1e-10 * std::max(1.0, C.norm()));
  }
}

TEST_CASE("coordinates and shifts") {
  Rng rng(71);
  FreudenthalPoint P = random_pc(rng);
  CHECK((FreudenthalPoint::from_coords(P.coords()) - P).norm() == 0);
  CHECK((P.shift_up().shift_down() - P).norm() == 0);
  // index-shift intertwines the slot maps
  for (int k = 0; k < 3; ++k) {
    FreudenthalPoint lhs = kappa((k + 1) % 3, P.shift_up());
    FreudenthalPoint rhs = kappa(k, P).shift_up();
    CHECK((lhs - rhs).norm() < 1e-13 * P.norm());
    FreudenthalPoint lm = mu((k + 1) % 3, P.shift_up());
    FreudenthalPoint rm = mu(k, P).shift_up();
    CHECK((lm - rm).norm() < 1e-13 * P.norm());
  }
}

TEST_CASE("the first identity restricts to the bilinear trace form") {
  // on points with vanishing scalar slots, identity (1) evaluates the pairing
  // of the two 27-dim parts
  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    FreudenthalPoint P = random_pc(rng);
    P.xi = 0;
    P.eta = 0;
    auto r = rank1_residuals(P);
    CHECK(r[0] == doctest::Approx(std::abs(bilinear_form(P.X, P.Y))).epsilon(1e-12));
  }
}
