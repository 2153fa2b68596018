#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinor/classical.hpp"

using namespace spinor;

TEST_CASE("identity factors trivially") {
  for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion}) {
    QMat3 E = QMat3::identity(r);
    FactorTriple t = decompose_classical(E);
    ClassicalReport rep = verify_factors(E, t);
    CHECK(rep.reconstruction < 1e-13);
    CHECK(rep.max_subgroup() < 1e-13);
  }
}

TEST_CASE("rotation sending e1 to e2") {
  QMat3 A = QMat3::identity(Ring::Real);
  A.at(0, 0) = Quaternion::real(0);
  A.at(1, 1) = Quaternion::real(0);
  A.at(1, 0) = Quaternion::real(1);
  A.at(0, 1) = Quaternion::real(-1);
  REQUIRE(group_residual(A) < 1e-14);
  FactorTriple t = decompose_classical(A);
  ClassicalReport rep = verify_factors(A, t);
  CHECK(rep.reconstruction < 1e-12);
  CHECK(rep.max_subgroup() < 1e-13);
}

TEST_CASE("half turn: the A e1 = -e1 edge needs no quaternion phase in SO(3)") {
  QMat3 A = QMat3::identity(Ring::Real);
  A.at(0, 0) = Quaternion::real(-1);
  A.at(2, 2) = Quaternion::real(-1);
  REQUIRE(group_residual(A) < 1e-14);
  FactorTriple t = decompose_classical(A);
  ClassicalReport rep = verify_factors(A, t);
  CHECK(rep.reconstruction < 1e-12);
  CHECK(rep.max_subgroup() < 1e-13);
  CHECK(group_residual(t.A2) < 1e-12);  // the half turn stayed inside SO(3)
}

TEST_CASE("sampled elements decompose across all three rings") {
  std::uint64_t seed = 100;
  for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion}) {
    double worst_rec = 0, worst_sub = 0, worst_grp = 0;
    for (int i = 0; i < 200; ++i) {
      Rng rng(seed++);
      QMat3 A = sample_group_matrix(r, rng);
      worst_grp = std::max(worst_grp, group_residual(A));
      FactorTriple t = decompose_classical(A);
      ClassicalReport rep = verify_factors(A, t);
      worst_rec = std::max(worst_rec, rep.reconstruction);
      worst_sub = std::max(worst_sub, rep.max_subgroup());
      worst_grp = std::max(worst_grp, group_residual(t.A1));
      worst_grp = std::max(worst_grp, group_residual(t.A2));
      worst_grp = std::max(worst_grp, group_residual(t.A1p));
    }
    CAPTURE(ring_name(r));
    CHECK(worst_grp < 1e-12);
    CHECK(worst_rec < 1e-10);
    CHECK(worst_sub < 1e-12);
  }
}

TEST_CASE("degenerate first-column slots") {
  Rng rng(400);
  // a2 = 0: column (a1, 0, a3)
  QMat3 A = sample_group_matrix(Ring::Quaternion, rng);
  // build an element with a zero second slot by a quarter turn of a sample
  QMat3 R = QMat3::identity(Ring::Quaternion);
  FactorTriple t0 = decompose_classical(A);
  // A1p fixes e1, so its first column is exactly e1: both a2 = a3 = 0
  FactorTriple t = decompose_classical(t0.A1p);
  ClassicalReport rep = verify_factors(t0.A1p, t);
  CHECK(rep.reconstruction < 1e-10);
  CHECK(rep.max_subgroup() < 1e-12);
  (void)R;
}

TEST_CASE("perturbed factor shows up in the reconstruction residual") {
  Rng rng(500);
  QMat3 A = sample_group_matrix(Ring::Complex, rng);
  FactorTriple t = decompose_classical(A);
  t.A2.at(0, 0).w += 1e-3;
  ClassicalReport rep = verify_factors(A, t);
  CHECK(rep.reconstruction > 1e-4);
  CHECK(rep.reconstruction < 1e-2);
}

TEST_CASE("membership gate rejects non-group input") {
  QMat3 A = QMat3::identity(Ring::Real);
  A.at(0, 0) = Quaternion::real(2);
  CHECK_THROWS_AS(decompose_classical(A), NotInGroup);
}
