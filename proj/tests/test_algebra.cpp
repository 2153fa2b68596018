#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "spinor/algebra.hpp"
#include "spinor/rng.hpp"

using namespace spinor;

namespace {

// independent oracle: Cayley-Dickson doubling evaluated directly on pairs of
// quaternions, no structure tables involved
Octonion cd_mul(const Octonion& a, const Octonion& b) {
  auto q = [](const Octonion& o, int off) { return Quaternion{o[off], o[off + 1], o[off + 2], o[off + 3]}; };
  Quaternion a1 = q(a, 0), a2 = q(a, 4), b1 = q(b, 0), b2 = q(b, 4);
  Quaternion z1 = a1 * b1 - b2.conj() * a2;
  Quaternion z2 = b2 * a1 + a2 * b1.conj();
  Octonion z;
  z[0] = z1.w; z[1] = z1.x; z[2] = z1.y; z[3] = z1.z;
  z[4] = z2.w; z[5] = z2.x; z[6] = z2.y; z[7] = z2.z;
  return z;
}

}  // namespace

TEST_CASE("multiplication table matches the doubling oracle and the golden file") {
  const OctTable& t = oct_table();
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Octonion p = cd_mul(Octonion::unit(i), Octonion::unit(j));
      CHECK(p[t.index[i][j]] == t.sign[i][j]);
      CHECK((oct_mul(Octonion::unit(i), Octonion::unit(j)) - p).norm() == 0);
    }
  }
  std::ifstream in(std::string(SPINOR_TEST_DATA) + "/oct_table.json");
  REQUIRE(in.good());
  nlohmann::json golden;
  in >> golden;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      CHECK(golden["index"][i][j].get<int>() == t.index[i][j]);
      CHECK(golden["sign"][i][j].get<double>() == t.sign[i][j]);
    }
}

TEST_CASE("identity, e1 e2 = e3 and the associativity witness") {
  Rng rng(7);
  Octonion x = rng.oct_normal();
  CHECK((oct_mul(Octonion::unit(0), x) - x).norm() == 0);
  CHECK((oct_mul(Octonion::unit(1), Octonion::unit(2)) - Octonion::unit(3)).norm() == 0);
  Octonion w1 = oct_mul(oct_mul(Octonion::unit(1), Octonion::unit(2)), Octonion::unit(4));
  Octonion w2 = oct_mul(Octonion::unit(1), oct_mul(Octonion::unit(2), Octonion::unit(4)));
  CHECK((w1 - Octonion::unit(7)).norm() == 0);
  CHECK((w2 + Octonion::unit(7)).norm() == 0);
}

TEST_CASE("composition law, alternativity, conjugation anti-homomorphism") {
  Rng rng(11);
  for (int t = 0; t < 2000; ++t) {
    Octonion a = rng.oct_normal(), b = rng.oct_normal();
    CHECK(std::abs(oct_mul(a, b).norm() - a.norm() * b.norm()) <= 1e-12 * a.norm() * b.norm());
    CHECK((oct_mul(a, oct_mul(a, b)) - oct_mul(oct_mul(a, a), b)).norm() <= 1e-12 * a.norm2() * b.norm());
    CHECK((oct_mul(oct_mul(b, a), a) - oct_mul(b, oct_mul(a, a))).norm() <= 1e-12 * a.norm2() * b.norm());
    CHECK((oct_mul(a, b).conj() - oct_mul(b.conj(), a.conj())).norm() <= 1e-13 * a.norm() * b.norm());
  }
}

TEST_CASE("inner product") {
  CHECK(oct_inner(Octonion::unit(1), Octonion::unit(2)) == 0);
  Rng rng(13);
  Octonion a = rng.oct_normal(), b = rng.oct_normal();
  CHECK(oct_inner(a, a) == doctest::Approx(a.norm2()));
  // (a, b) = (a conj(b) + b conj(a)) / 2
  Octonion s = oct_mul(a, b.conj()) + oct_mul(b, a.conj());
  CHECK(s[0] / 2 == doctest::Approx(oct_inner(a, b)));
  for (int i = 1; i < 8; ++i) CHECK(std::abs(s[i]) < 1e-12);
  // (1 + e1, 1 - e1) = 0
  Octonion u = Octonion::unit(0) + Octonion::unit(1);
  Octonion v = Octonion::unit(0) - Octonion::unit(1);
  CHECK(oct_inner(u, v) == 0);
}

TEST_CASE("quaternion polar form") {
  SUBCASE("real positive") {
    QuatPolar p = quat_polar(Quaternion::real(1));
    CHECK(p.r == 1);
    CHECK(p.theta == 0);
    CHECK(p.u.x == 1);  // tie-break u = i
  }
  SUBCASE("real negative") {
    QuatPolar p = quat_polar(Quaternion::real(-2));
    CHECK(p.r == 2);
    CHECK(p.theta == doctest::Approx(M_PI));
  }
  SUBCASE("pure k") {
    QuatPolar p = quat_polar(Quaternion{0, 0, 0, 1});
    CHECK(p.r == doctest::Approx(1));
    CHECK(p.theta == doctest::Approx(M_PI / 2));
    CHECK(p.u.z == doctest::Approx(1));
  }
  SUBCASE("1 + i") {
    QuatPolar p = quat_polar(Quaternion{1, 1, 0, 0});
    CHECK(p.r == doctest::Approx(std::sqrt(2.0)));
    CHECK(p.theta == doctest::Approx(M_PI / 4));
    CHECK(p.u.x == doctest::Approx(1));
  }
  SUBCASE("round trip") {
    Rng rng(17);
    for (int t = 0; t < 500; ++t) {
      Quaternion a{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
      QuatPolar p = quat_polar(a);
      Quaternion back = quat_exp(p.u, p.theta) * p.r;
      CHECK((back - a).norm() <= 1e-12 * std::max(1.0, a.norm()));
      CHECK(p.theta >= 0);
      CHECK(p.theta <= M_PI);
      CHECK((p.u * p.u + Quaternion::real(1)).norm() < 1e-12);
    }
  }
}

TEST_CASE("complexified octonions: conjugations and the null witness") {
  ComplexOctonion x(Octonion::unit(1), Octonion::unit(2));  // e1 + i e2
  SUBCASE("tau flips the commuting unit") {
    ComplexOctonion t = x.tau();
    CHECK(t[1] == Cx(1, 0));
    CHECK(t[2] == Cx(0, -1));
  }
  SUBCASE("x bar(x) = 0 although x != 0") {
    CHECK(x.norm() > 1);
    CHECK(coct_mul(x, x.bar()).norm() == 0);
  }
  SUBCASE("on real octonions x bar(x) = 0 forces x = 0") {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
      Octonion a = rng.oct_normal();
      CHECK(oct_mul(a, a.conj())[0] == doctest::Approx(a.norm2()));
    }
  }
  SUBCASE("bar and tau commute; tau is multiplicative, bar reverses") {
    Rng rng(29);
    for (int t = 0; t < 200; ++t) {
      ComplexOctonion a = rng.coct_normal(), b = rng.coct_normal();
      CHECK((a.bar().tau() - a.tau().bar()).norm() == 0);
      CHECK((coct_mul(a, b).tau() - coct_mul(a.tau(), b.tau())).norm() <= 1e-12 * a.norm() * b.norm());
      CHECK((coct_mul(a, b).bar() - coct_mul(b.bar(), a.bar())).norm() <= 1e-12 * a.norm() * b.norm());
      // x bar(x) lands in the complex scalars
      ComplexOctonion n = coct_mul(a, a.bar());
      double off = 0;
      for (int i = 1; i < 8; ++i) off += std::norm(n[i]);
      CHECK(std::sqrt(off) <= 1e-12 * a.norm2());
      Cx expect(a.re().norm2() - a.im().norm2(), 2 * oct_inner(a.re(), a.im()));
      CHECK(std::abs(n[0] - expect) <= 1e-12 * a.norm2());
    }
  }
}
