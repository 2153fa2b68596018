#ifndef SPINOR_RNG_HPP
#define SPINOR_RNG_HPP

#include <cstdint>
#include <random>

#include "spinor/algebra.hpp"

namespace spinor {

/// Deterministic random source: mt19937_64 with explicit value mappings, so
/// identical seeds give identical streams on every platform (the standard
/// distributions are implementation-defined and are not used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t below(std::uint64_t n) { return bits() % n; }

  /// standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Octonion oct_normal() {
    Octonion o;
    for (int i = 0; i < 8; ++i) o[i] = normal();
    return o;
  }

  /// uniform direction on the octonion unit sphere
  Octonion oct_direction() {
    Octonion o = oct_normal();
    double n = o.norm();
    while (n < 1e-12) {
      o = oct_normal();
      n = o.norm();
    }
    return o * (1.0 / n);
  }

  ComplexOctonion coct_normal() { return ComplexOctonion(oct_normal(), oct_normal()); }

  Cx cx_normal() { return Cx(normal(), normal()); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace spinor

#endif
