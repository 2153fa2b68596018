#include "spinor/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace spinor {

namespace {
constexpr double kSlotTol = 1e-9;   // parameter-selection floor for slot masses
constexpr double kStepTol = 1e-9;   // per-step slot-zeroing verification
}  // namespace

bool DecisionLog::nonzero(double value, double threshold) {
  int idx = static_cast<int>(entries.size());
  bool res = value > threshold;
  if (flips && flips->count(idx)) res = !res;
  entries.push_back({value, threshold, res});
  return res;
}

std::string CaseTrace::joined() const {
  std::string s;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += "/";
    s += labels[i];
  }
  return s;
}


// ---------------------------------------------------------------------------
// 27-dim moves
// ---------------------------------------------------------------------------

namespace {

Octonion quarter(const Octonion& dir) { return dir * (M_PI / 4); }

void check_slot(double value, double scale, const char* what) {
  if (value > kStepTol * std::max(1.0, scale)) {
    throw ReductionStalled(std::string("slot not cleared: ") + what);
  }
}

}  // namespace

Word clear_xslot(const JordanElement& X0, int k) {
  Word word;
  JordanElement X = X0;
  double scale = std::max(1.0, X.norm());
  auto push = [&](const GenSpec& g) {
    word.push_back(g);
    X = apply(g, X);
  };
  if (X.x[k].norm() < kSlotTol) return word;
  push(GenSpec::make(Family::Alpha, k, quarter(perp_direction({X.x[k].re(), X.x[k].im()}))));
  push(GenSpec::make(Family::Beta, k, quarter(perp_direction({X.x[k].re(), X.x[k].im()}))));
  Octonion q = X.x[k].im();
  if (q.norm() > kSlotTol) {
    push(GenSpec::make(Family::Alpha, k, quarter(q * (1.0 / q.norm()))));
  }
  check_slot(X.x[k].im().norm(), scale, "x imag");
  Octonion p = X.x[k].re();
  if (p.norm() > kSlotTol) {
    push(GenSpec::make(Family::Beta, k, quarter(p * (1.0 / p.norm()))));
  }
  check_slot(X.x[k].norm(), scale, "x");
  return word;
}

Word realify_second_spinor(const JordanElement& X0, int k) {
  int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
  Word word;
  Octonion z2 = X0.x[k1].im(), z3 = X0.x[k2].im();
  double scale = std::max(1.0, X0.norm());
  if (z3.norm() < kSlotTol) return word;
  if (z2.norm() < kSlotTol) {
    word.push_back(GenSpec::make(Family::Alpha, k, Octonion::real(M_PI / 2)));
    check_slot(apply_word(word, X0).x[k2].im().norm(), scale, "imag swap");
    return word;
  }
  Octonion pr = oct_mul(z2, z3);
  double prn = pr.norm();
  double ang = std::atan2(1.0, -z2.norm() / z3.norm());  // cot(ang) = -|z2|/|z3|, in (pi/2, pi)
  word.push_back(GenSpec::make(Family::Alpha, k, pr.conj() * (ang / prn)));
  if (apply_word(word, X0).x[k2].im().norm() > kStepTol * scale) {
    word.back() = GenSpec::make(Family::Alpha, k, pr.conj() * ((M_PI - ang) / prn));
  }
  check_slot(apply_word(word, X0).x[k2].im().norm(), scale, "imag part");
  return word;
}

Word reduce_spinor_slot(const JordanElement& X, int variant, int k) {
  if (variant == 1) {
    int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
    if (X.x[k1].norm() > kStepTol || X.x[k2].norm() > kStepTol)
      throw PreconditionViolated("variant 1 expects the other spinor slots empty");
    return clear_xslot(X, k);
  }
  if (variant == 2) {
    int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
    if (std::abs(X.xi[k1]) > kStepTol || std::abs(X.xi[k2]) > kStepTol ||
        X.x[k].norm() > kStepTol)
      throw PreconditionViolated("variant 2 expects a diagonal-free element");
    return realify_second_spinor(X, k);
  }
  throw std::invalid_argument("variant must be 1 or 2");
}

Word reduce_orbit_f4(const JordanElement& X0, double tol, DecisionLog* log) {
  if (X0.imag_norm() > tol) throw PreconditionViolated("expected a real element");
  if (sharp(X0).norm() > std::max(tol, 1e-6)) throw NotRankOne("sharp residual too large");
  if (std::abs(trace(X0) - Cx(1, 0)) > std::max(tol, 1e-6))
    throw NotUnitTrace("trace is not 1");
  DecisionLog local;
  DecisionLog& dl = log ? *log : local;

  Word word;
  JordanElement X = X0;
  auto push = [&](const GenSpec& g) {
    word.push_back(g);
    X = apply(g, X);
  };
  if ((X - JordanElement::diag_unit(0)).norm() <= tol) return word;
  double scale = std::max(1.0, X.norm());

  Octonion x1 = X.x[0].re();
  if (x1.norm() > kSlotTol) {
    push(GenSpec::make(Family::Alpha, 0, quarter(perp_direction({x1}))));
    x1 = X.x[0].re();
    if (x1.norm() > kSlotTol)
      push(GenSpec::make(Family::Alpha, 0, quarter(x1 * (1.0 / x1.norm()))));
    check_slot(X.x[0].norm(), scale, "x1");
  }
  if (dl.nonzero(std::abs(X.xi[1]), kCaseEps * scale)) {
    // second diagonal occupied: half-turn into the first-cleared configuration
    push(GenSpec::make(Family::Alpha, 0, Octonion::real(M_PI / 2)));
  }
  Octonion x2 = X.x[1].re();
  if (x2.norm() > kSlotTol) {
    push(GenSpec::make(Family::Alpha, 1, quarter(perp_direction({x2}))));
    x2 = X.x[1].re();
    if (x2.norm() > kSlotTol)
      push(GenSpec::make(Family::Alpha, 1, quarter(x2 * (1.0 / x2.norm()))));
    check_slot(X.x[1].norm(), scale, "x2");
  }
  if (!dl.nonzero(std::abs(X.xi[0]), kCaseEps * scale)) {
    push(GenSpec::make(Family::Alpha, 1, Octonion::real(M_PI / 2)));
  }
  if ((X - JordanElement::diag_unit(0)).norm() > std::max(tol, 1e-7) * scale)
    throw ReductionStalled("endpoint is not E1");
  return word;
}

Word reduce_orbit_e6(const JordanElement& X0, double tol, DecisionLog* log) {
  if (sharp(X0).norm() > std::max(tol, 1e-6)) throw NotRankOne("sharp residual too large");
  DecisionLog local;
  DecisionLog& dl = log ? *log : local;

  Word word;
  JordanElement X = X0;
  auto push = [&](const GenSpec& g) {
    word.push_back(g);
    X = apply(g, X);
  };
  auto push_word = [&](const Word& w) {
    for (const GenSpec& g : w) push(g);
  };
  if ((X - JordanElement::diag_unit(0)).norm() <= tol) return word;
  double scale = std::max(1.0, X.norm());

  push_word(clear_xslot(X, 0));
  bool xi2 = dl.nonzero(std::abs(X.xi[1]), kCaseEps * scale);
  bool xi3 = dl.nonzero(std::abs(X.xi[2]), kCaseEps * scale);
  if (xi2 && !xi3) {
    push(GenSpec::make(Family::Alpha, 0, Octonion::real(M_PI / 2)));
  } else if (!xi2 && !xi3) {
    push_word(realify_second_spinor(X, 0));
    // rank-1 now forces the realified slot to vanish
  }
  push_word(clear_xslot(X, 1));
  if (!dl.nonzero(std::abs(X.xi[0]), kCaseEps * scale)) {
    push(GenSpec::make(Family::Alpha, 1, Octonion::real(M_PI / 2)));
  }
  double t = -std::arg(X.xi[0]);
  if (std::abs(t) > 1e-15) push(GenSpec::eps2(1, t));
  if ((X - JordanElement::diag_unit(0)).norm() > std::max(tol, 1e-7) * scale)
    throw ReductionStalled("endpoint is not E1");
  return word;
}

// ---------------------------------------------------------------------------
// 56-dim moves
// ---------------------------------------------------------------------------

namespace {

struct VPrimeCoords {
  Cx xi1, xi2;       // the two off-slot diagonal entries of X
  ComplexOctonion x;  // x_k
  Cx eta_k, eta;
};

VPrimeCoords vprime(const FreudenthalPoint& P, int k) {
  int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
  return {P.X.xi[k1], P.X.xi[k2], P.X.x[k], P.Y.xi[k], P.eta};
}

struct VCoords {
  Cx xi_k;
  Cx eta1, eta2;
  ComplexOctonion y;  // y_k
  Cx xi;
};

VCoords vpart(const FreudenthalPoint& P, int k) {
  int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
  return {P.X.xi[k], P.Y.xi[k1], P.Y.xi[k2], P.Y.x[k], P.xi};
}

Octonion oct_dir(const ComplexOctonion& z) {
  return perp_direction({z.re(), z.im()});
}

}  // namespace

namespace {

/// zero (xi_{k+1}, xi_{k+2}, x_k) into the (eta_k, eta) pair
Word vprime_collapse(const FreudenthalPoint& P0, int k) {
  Word word;
  FreudenthalPoint P = P0;
  double scale = std::max(1.0, P.norm());
  auto push = [&](const GenSpec& g) {
    word.push_back(g);
    P = apply(g, P);
  };
  {
    VPrimeCoords c = vprime(P, k);
    double mass = std::sqrt(std::norm(c.xi1) + std::norm(c.xi2) + c.x.norm2());
    if (mass < kSlotTol) return word;
  }
  VPrimeCoords c = vprime(P, k);
  if (std::abs(c.xi1 - c.xi2) > kSlotTol)
    push(GenSpec::make(Family::Alpha, k, quarter(oct_dir(c.x))));
  c = vprime(P, k);
  if (std::abs(c.xi1 + c.xi2) > kSlotTol)
    push(GenSpec::make(Family::Beta, k, quarter(oct_dir(c.x))));
  c = vprime(P, k);
  check_slot(std::hypot(std::abs(c.xi1), std::abs(c.xi2)), scale, "diagonal pair");
  if (std::abs(c.eta_k + c.eta) > kSlotTol)
    push(GenSpec::make(Family::Gamma, k, quarter(oct_dir(c.x))));
  c = vprime(P, k);
  if (std::abs(c.eta_k - c.eta) > kSlotTol)
    push(GenSpec::make(Family::Delta, k, quarter(oct_dir(c.x))));
  c = vprime(P, k);
  check_slot(std::hypot(std::abs(c.eta_k), std::abs(c.eta)), scale, "eta pair");
  Octonion q = c.x.im();
  if (q.norm() > kSlotTol) push(GenSpec::make(Family::Gamma, k, quarter(q * (1.0 / q.norm()))));
  c = vprime(P, k);
  check_slot(c.x.im().norm(), scale, "x imag");
  Octonion p = c.x.re();
  if (p.norm() > kSlotTol) push(GenSpec::make(Family::Delta, k, quarter(p * (1.0 / p.norm()))));
  c = vprime(P, k);
  check_slot(std::sqrt(std::norm(c.xi1) + std::norm(c.xi2) + c.x.norm2()), scale, "vprime");
  return word;
}

/// zero (eta_{k+1}, eta_{k+2}, y_k) into the (xi_k, xi) pair
Word v_collapse(const FreudenthalPoint& P0, int k) {
  Word word;
  FreudenthalPoint P = P0;
  double scale = std::max(1.0, P.norm());
  auto push = [&](const GenSpec& g) {
    word.push_back(g);
    P = apply(g, P);
  };
  {
    VCoords c = vpart(P, k);
    double mass = std::sqrt(std::norm(c.eta1) + std::norm(c.eta2) + c.y.norm2());
    if (mass < kSlotTol) return word;
  }
  VCoords c = vpart(P, k);
  if (std::abs(c.eta1 - c.eta2) > kSlotTol)
    push(GenSpec::make(Family::Alpha, k, quarter(oct_dir(c.y))));
  c = vpart(P, k);
  if (std::abs(c.eta1 + c.eta2) > kSlotTol)
    push(GenSpec::make(Family::Beta, k, quarter(oct_dir(c.y))));
  c = vpart(P, k);
  check_slot(std::hypot(std::abs(c.eta1), std::abs(c.eta2)), scale, "eta diagonal pair");
  if (std::abs(c.xi_k + c.xi) > kSlotTol)
    push(GenSpec::make(Family::Gamma, k, quarter(oct_dir(c.y))));
  c = vpart(P, k);
  if (std::abs(c.xi_k - c.xi) > kSlotTol)
    push(GenSpec::make(Family::Delta, k, quarter(oct_dir(c.y))));
  c = vpart(P, k);
  check_slot(std::hypot(std::abs(c.xi_k), std::abs(c.xi)), scale, "xi pair");
  Octonion q = c.y.im();
  if (q.norm() > kSlotTol) push(GenSpec::make(Family::Gamma, k, quarter(q * (1.0 / q.norm()))));
  c = vpart(P, k);
  check_slot(c.y.im().norm(), scale, "y imag");
  Octonion p = c.y.re();
  if (p.norm() > kSlotTol) push(GenSpec::make(Family::Delta, k, quarter(p * (1.0 / p.norm()))));
  c = vpart(P, k);
  check_slot(std::sqrt(std::norm(c.eta1) + std::norm(c.eta2) + c.y.norm2()), scale, "vpart");
  return word;
}

/// clear the y_k slot with moves chosen from the Y side
Word clear_yslot(const FreudenthalPoint& P0, int k) {
  Word word;
  FreudenthalPoint P = P0;
  double scale = std::max(1.0, P.norm());
  auto push = [&](const GenSpec& g) {
    word.push_back(g);
    P = apply(g, P);
  };
  if (P.Y.x[k].norm() < kSlotTol) return word;
  push(GenSpec::make(Family::Alpha, k, quarter(oct_dir(P.Y.x[k]))));
  push(GenSpec::make(Family::Beta, k, quarter(oct_dir(P.Y.x[k]))));
  Octonion q = P.Y.x[k].im();
  if (q.norm() > kSlotTol) push(GenSpec::make(Family::Alpha, k, quarter(q * (1.0 / q.norm()))));
  check_slot(P.Y.x[k].im().norm(), scale, "y imag");
  Octonion p = P.Y.x[k].re();
  if (p.norm() > kSlotTol) push(GenSpec::make(Family::Beta, k, quarter(p * (1.0 / p.norm()))));
  check_slot(P.Y.x[k].norm(), scale, "y");
  return word;
}

}  // namespace

Word pattern_reduce(const FreudenthalPoint& P0, int k, PatternVariant variant) {
  Word word;
  FreudenthalPoint P = P0;
  if (variant == PatternVariant::KeepEtaPair) {
    word = vprime_collapse(P, k);
    P = apply_word(word, P0);
    Word w2 = clear_yslot(P, k);
    word.insert(word.end(), w2.begin(), w2.end());
  } else {
    word = v_collapse(P, k);
    P = apply_word(word, P0);
    Word w2 = clear_xslot(P.X, k);
    word.insert(word.end(), w2.begin(), w2.end());
  }
  return word;
}

Word reduce_to_base_point(const FreudenthalPoint& P0, int k, double tol) {
  double scale = std::max(1.0, P0.norm());
  // precondition: the point lives in the k-th invariant 12-dim block
  {
    FreudenthalPoint Q = P0;
    Q.X.xi[(k + 1) % 3] = 0;
    Q.X.xi[(k + 2) % 3] = 0;
    Q.X.x[k] = ComplexOctonion{};
    Q.Y.xi[k] = 0;
    Q.eta = 0;
    if (Q.norm() > 1e-5 * scale)
      throw PreconditionViolated("point is outside the special zero pattern");
  }
  if (rank1_max_residual(P0) > std::max(tol, 1e-6)) throw NotRankOne("rank-1 residuals too large");
  if (std::abs(inner_p(P0, P0) - Cx(1, 0)) > std::max(tol, 1e-6))
    throw NormNotOne("unit norm required");

  Word word;
  FreudenthalPoint P = P0;
  auto push = [&](const GenSpec& g) {
    word.push_back(g);
    P = apply(g, P);
  };
  if ((P - one_point()).norm() <= tol) return word;
  Word w = vprime_collapse(P, k);
  for (const GenSpec& g : w) push(g);

  Cx eta_k = P.Y.xi[k], eta = P.eta;
  if (std::abs(eta) <= kCaseEps * scale && std::abs(eta_k) > kCaseEps * scale) {
    push(GenSpec::make(Family::Gamma, k, Octonion::real(M_PI / 2)));
    eta = P.eta;
  }
  if (std::abs(eta) <= kCaseEps * scale)
    throw ReductionStalled("both endgame components vanish (upstream tolerance failure)");
  Cx th = std::sqrt(P.eta);
  push(GenSpec::eps1(k, th));
  if ((P - one_point()).norm() > std::max(tol, 1e-7) * scale)
    throw ReductionStalled("endgame did not reach the distinguished point");
  return word;
}

Word reduce_orbit_e7(const FreudenthalPoint& P0, double tol, CaseTrace& trace, DecisionLog* log) {
  DecisionLog local;
  DecisionLog& dl = log ? *log : local;
  trace.eps_case = kCaseEps;

  Word word;
  FreudenthalPoint P = P0;
  double scale = std::max(1.0, P.norm());
  auto push = [&](const GenSpec& g) {
    word.push_back(g);
    P = apply(g, P);
  };
  auto push_word = [&](const Word& w) {
    for (const GenSpec& g : w) push(g);
  };
  auto nz = [&](Cx v) { return dl.nonzero(std::abs(v), kCaseEps * scale); };
  auto nzn = [&](double v) { return dl.nonzero(v, kCaseEps * scale); };

  push_word(pattern_reduce(P, 0, PatternVariant::KeepEtaPair));

  // shape-based handler for the eta-scalar-nonzero family of patterns
  auto case_one = [&]() {
    bool e2 = nz(P.Y.xi[1]), e3 = nz(P.Y.xi[2]);
    if (e2 || e3) {
      if (!e2 && e3) {
        trace.labels.push_back("I.A");
        push(GenSpec::make(Family::Alpha, 0, Octonion::real(M_PI / 2)));
        push_word(reduce_to_base_point(P, 1, tol));
      } else if (e2 && !e3) {
        trace.labels.push_back("I.B");
        push_word(reduce_to_base_point(P, 1, tol));
      } else {
        throw ImpossibleCaseReached("both secondary slots populated under rank-1");
      }
      return;
    }
    bool n2 = nzn(P.X.x[1].norm()), n3 = nzn(P.X.x[2].norm());
    if (n2 && n3) {
      trace.labels.push_back("I.C.1");
      push_word(realify_second_spinor(P.X, 0));
      // rank-1 now clears the realified slot
    } else if (!n2 && n3) {
      trace.labels.push_back("I.C.2");
      push(GenSpec::make(Family::Alpha, 0, Octonion::real(M_PI / 2)));
    } else if (n2 && !n3) {
      trace.labels.push_back("I.C.3");
    } else {
      trace.labels.push_back("I.C.4");
    }
    push_word(reduce_to_base_point(P, 1, tol));
  };

  std::function<void()> case_three_c11 = [&]() {
    trace.labels.push_back("III.C.1.1");
    bool e1 = nz(P.Y.xi[0]), e3 = nz(P.Y.xi[2]);
    if (!e1 && e3) {
      trace.labels.push_back("III.C.1.1.1");
      push(GenSpec::make(Family::Alpha, 1, Octonion::real(M_PI / 2)));
      push_word(reduce_to_base_point(P, 0, tol));
    } else if (e1 && !e3) {
      trace.labels.push_back("III.C.1.1.2");
      push_word(reduce_to_base_point(P, 0, tol));
    } else if (e1 && e3) {
      throw ImpossibleCaseReached("secondary pair populated under rank-1");
    } else {
      bool n1 = nzn(P.X.x[0].norm()), n3 = nzn(P.X.x[2].norm());
      if (n1 && n3) {
        trace.labels.push_back("III.C.1.1.3.i");
        push_word(realify_second_spinor(P.X, 1));
        push(GenSpec::make(Family::Alpha, 1, Octonion::real(M_PI / 2)));
      } else if (!n1 && n3) {
        trace.labels.push_back("III.C.1.1.3.ii");
        push(GenSpec::make(Family::Alpha, 1, Octonion::real(M_PI / 2)));
      } else if (n1 && !n3) {
        trace.labels.push_back("III.C.1.1.3.iii");
      } else {
        trace.labels.push_back("III.C.1.1.3.iv");
      }
      push_word(reduce_to_base_point(P, 0, tol));
    }
  };

  auto case_three_c1 = [&]() {
    trace.labels.push_back("III.C.1");
    push_word(pattern_reduce(P, 1, PatternVariant::KeepEtaPair));
    bool e2 = nz(P.Y.xi[1]), e = nz(P.eta);
    if (!e2 && e) {
      case_three_c11();
    } else if (e2 && !e) {
      trace.labels.push_back("III.C.1.2");
      push(GenSpec::make(Family::Gamma, 1, Octonion::real(M_PI / 2)));
      case_three_c11();
    } else {
      throw ImpossibleCaseReached("III.C.1.3 (tolerance misclassification)");
    }
  };

  bool eta1 = nz(P.Y.xi[0]), eta = nz(P.eta);
  if (!eta1 && eta) {
    trace.labels.push_back("I");
    case_one();
  } else if (eta1 && !eta) {
    trace.labels.push_back("II");
    push(GenSpec::make(Family::Delta, 0, Octonion::real(M_PI / 2)));
    trace.labels.push_back("I");
    case_one();
  } else if (!eta1 && !eta) {
    trace.labels.push_back("III");
    push_word(pattern_reduce(P, 0, PatternVariant::KeepXiPair));
    bool xi1 = nz(P.X.xi[0]), xi = nz(P.xi);
    if (!xi1 && xi) {
      trace.labels.push_back("III.A");
      push(GenSpec::make(Family::Gamma, 0, Octonion::real(M_PI / 2)));
      case_one();
    } else if (xi1 && !xi) {
      trace.labels.push_back("III.B");
      case_one();
    } else if (!xi1 && !xi) {
      trace.labels.push_back("III.C");
      if (nzn(P.X.x[1].norm())) {
        case_three_c1();
      } else if (nzn(P.X.x[2].norm())) {
        trace.labels.push_back("III.C.2");
        push(GenSpec::make(Family::Alpha, 0, Octonion::real(M_PI / 2)));
        case_three_c1();
      } else if (nzn(P.Y.x[2].norm())) {
        trace.labels.push_back("III.C.3");
        push(GenSpec::make(Family::Gamma, 0, Octonion::real(M_PI / 2)));
        case_three_c1();
      } else if (nzn(P.Y.x[1].norm())) {
        trace.labels.push_back("III.C.4");
        push(GenSpec::make(Family::Alpha, 0, Octonion::real(M_PI / 2)));
        trace.labels.push_back("III.C.3");
        push(GenSpec::make(Family::Gamma, 0, Octonion::real(M_PI / 2)));
        case_three_c1();
      } else {
        throw ImpossibleCaseReached("III.C.5 (the point would vanish)");
      }
    } else {
      throw ImpossibleCaseReached("scalar pair populated under rank-1");
    }
  } else {
    throw ImpossibleCaseReached("eta pair populated under rank-1");
  }

  trace.final_residual = (P - one_point()).norm();
  if (trace.final_residual > std::max(tol, 1e-7) * scale)
    throw ReductionStalled("reduction endpoint is not the distinguished point");
  return word;
}

// ---------------------------------------------------------------------------
// factor assembly
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<int, Word>> split_runs(const Word& w) {
  std::vector<std::pair<int, Word>> runs;
  for (const GenSpec& g : w) {
    if (!runs.empty() && runs.back().first == g.k) {
      runs.back().second.push_back(g);
    } else {
      runs.push_back({g.k, {g}});
    }
  }
  return runs;
}

std::string spin_label(int k, int n) {
  return "Spin" + std::to_string(k + 1) + "(" + std::to_string(n) + ")";
}

/// split a reduction word into at most [k-run, (k+1)-run, k-run] blocks
struct RunBlocks {
  Word a, b, c;  // a, c at base slot; b at the other slot
};

RunBlocks arrange_runs(const Word& w, int base, int other) {
  RunBlocks out;
  auto runs = split_runs(w);
  for (auto& [k, part] : runs) {
    if (k != base && k != other) throw VerificationFailed("unexpected slot in reduction word");
  }
  size_t i = 0;
  if (i < runs.size() && runs[i].first == base) out.a = runs[i++].second;
  if (i < runs.size() && runs[i].first == other) out.b = runs[i++].second;
  if (i < runs.size() && runs[i].first == base) out.c = runs[i++].second;
  if (i != runs.size()) throw VerificationFailed("reduction word exceeds the expected run shape");
  return out;
}

GroupOperator real_part_op(const GroupOperator& op) {
  GroupOperator out = op;
  out.m = op.m.real().cast<Cx>();
  return out;
}

}  // namespace

double DecompositionReport::max_membership() const {
  double m = 0;
  for (double v : factor_membership) m = std::max(m, v);
  for (double v : factor_fix) m = std::max(m, v);
  return m;
}

FactorSequence decompose_f4(const GroupOperator& op, double tol) {
  if (op.provenance != "generators") {
    MembershipReport rep = membership_residual(op, "f4");
    if (rep.residual > 1e-8) throw NotInGroup("input fails the 27-dim group law");
  }
  JordanElement X0 = op.apply(JordanElement::diag_unit(0)).real_part();

  std::set<int> flips;
  for (int attempt = 0; attempt < 8; ++attempt) {
    DecisionLog dl;
    dl.flips = &flips;
    Word red;
    try {
      red = reduce_orbit_f4(X0, tol, &dl);
    } catch (const ReductionStalled&) {
      if (dl.entries.empty() || attempt == 7) throw;
      // flip the most marginal decision and retry
      int best = 0;
      double bm = 1e300;
      for (size_t i = 0; i < dl.entries.size(); ++i) {
        double m = std::abs(std::log10(std::max(dl.entries[i].value, 1e-300) /
                                       dl.entries[i].threshold));
        if (!flips.count(int(i)) && m < bm) {
          bm = m;
          best = int(i);
        }
      }
      flips.insert(best);
      continue;
    }
    RunBlocks rb = arrange_runs(red, 0, 1);
    if (!rb.c.empty()) throw VerificationFailed("unexpected trailing run");
    GroupOperator MA = materialize_word(rb.a, RepSpace::J, "spin1(9)");
    GroupOperator MB = materialize_word(rb.b, RepSpace::J, "spin2(9)");
    FactorSequence seq;
    seq.group = "f4";
    GroupOperator f1 = materialize_word(inverse_word(rb.a), RepSpace::J, "spin1(9)");
    GroupOperator f2 = materialize_word(inverse_word(rb.b), RepSpace::J, "spin2(9)");
    GroupOperator f3 = MB * MA * op;
    f3 = real_part_op(f3);
    f3.space = RepSpace::J;
    f3.claim = "spin1(9)";
    f3.provenance = op.provenance;
    seq.factors.push_back({spin_label(0, 9), inverse_word(rb.a), f1});
    seq.factors.push_back({spin_label(1, 9), inverse_word(rb.b), f2});
    seq.factors.push_back({spin_label(0, 9), {}, f3});
    double recon = (f1.m * f2.m * f3.m - op.m).norm();
    if (recon > std::max(tol, 1e-7) * 27) {
      if (attempt == 7) throw VerificationFailed("reconstruction residual too large");
      continue;
    }
    return seq;
  }
  throw VerificationFailed("branch retries exhausted");
}

FactorSequence decompose_e6(const GroupOperator& op, double tol) {
  if (op.provenance != "generators") {
    MembershipReport rep = membership_residual(op, "e6");
    if (rep.residual > 1e-8) throw NotInGroup("input fails the 27-dim complex group laws");
  }
  JordanElement X0 = op.apply(JordanElement::diag_unit(0));

  std::set<int> flips;
  for (int attempt = 0; attempt < 8; ++attempt) {
    DecisionLog dl;
    dl.flips = &flips;
    Word red;
    try {
      red = reduce_orbit_e6(X0, tol, &dl);
    } catch (const ReductionStalled&) {
      if (dl.entries.empty() || attempt == 7) throw;
      int best = 0;
      double bm = 1e300;
      for (size_t i = 0; i < dl.entries.size(); ++i) {
        double m = std::abs(std::log10(std::max(dl.entries[i].value, 1e-300) /
                                       dl.entries[i].threshold));
        if (!flips.count(int(i)) && m < bm) {
          bm = m;
          best = int(i);
        }
      }
      flips.insert(best);
      continue;
    }
    RunBlocks rb = arrange_runs(red, 0, 1);
    if (!rb.c.empty()) throw VerificationFailed("unexpected trailing run");
    GroupOperator MA = materialize_word(rb.a, RepSpace::JC, "spin1(10)");
    GroupOperator MB = materialize_word(rb.b, RepSpace::JC, "spin2(10)");
    FactorSequence seq;
    seq.group = "e6";
    GroupOperator f1 = materialize_word(inverse_word(rb.a), RepSpace::JC, "spin1(10)");
    GroupOperator f2 = materialize_word(inverse_word(rb.b), RepSpace::JC, "spin2(10)");
    GroupOperator f3 = MB * MA * op;
    f3.space = RepSpace::JC;
    f3.claim = "spin1(10)";
    f3.provenance = op.provenance;
    seq.factors.push_back({spin_label(0, 10), inverse_word(rb.a), f1});
    seq.factors.push_back({spin_label(1, 10), inverse_word(rb.b), f2});
    seq.factors.push_back({spin_label(0, 10), {}, f3});
    double recon = (f1.m * f2.m * f3.m - op.m).norm();
    if (recon > std::max(tol, 1e-7) * 27) {
      if (attempt == 7) throw VerificationFailed("reconstruction residual too large");
      continue;
    }
    return seq;
  }
  throw VerificationFailed("branch retries exhausted");
}

FactorSequence decompose_e7(const GroupOperator& op, double tol) {
  if (op.provenance != "generators") {
    MembershipReport rep = membership_residual(op, "e7");
    if (rep.residual > 1e-8) throw NotInGroup("input fails the 56-dim partial group laws");
  }
  FreudenthalPoint P0 = op.apply(one_point());

  std::set<int> flips;
  for (int attempt = 0; attempt < 10; ++attempt) {
    DecisionLog dl;
    dl.flips = &flips;
    CaseTrace trace;
    Word red;
    try {
      red = reduce_orbit_e7(P0, tol, trace, &dl);
    } catch (const std::runtime_error&) {
      if (dl.entries.empty() || attempt == 9) throw;
      int best = -1;
      double bm = 1e300;
      for (size_t i = 0; i < dl.entries.size(); ++i) {
        double m = std::abs(std::log10(std::max(dl.entries[i].value, 1e-300) /
                                       dl.entries[i].threshold));
        if (!flips.count(int(i)) && m < bm) {
          bm = m;
          best = int(i);
        }
      }
      if (best < 0) throw;
      flips.insert(best);
      continue;
    }
    RunBlocks rb = arrange_runs(red, 0, 1);
    GroupOperator MA = materialize_word(rb.a, RepSpace::PC);
    GroupOperator MB = materialize_word(rb.b, RepSpace::PC);
    GroupOperator MC = materialize_word(rb.c, RepSpace::PC);
    GroupOperator sigma = MC * MB * MA * op;
    double fix = (sigma.apply(one_point()) - one_point()).norm();
    if (fix > std::max(tol, 1e-7) * 8) {
      if (attempt == 9) throw VerificationFailed("stabilizer residual too large");
      continue;
    }
    // extract the 27-dim block and check the embedding reproduces sigma
    GroupOperator beta;
    beta.space = RepSpace::JC;
    beta.claim = "e6";
    beta.provenance = op.provenance;
    beta.m = sigma.m.block(0, 0, 27, 27);
    GroupOperator emb = embed(beta, RepSpace::PC);
    if ((emb.m - sigma.m).norm() > 1e-8 * 56) {
      if (attempt == 9) throw VerificationFailed("stabilizer is not an embedded 27-dim element");
      continue;
    }
    FactorSequence inner6 = decompose_e6(beta, tol);

    FactorSequence seq;
    seq.group = "e7";
    seq.trace = trace;
    GroupOperator f1 = materialize_word(inverse_word(rb.a), RepSpace::PC, "spin1(12)");
    GroupOperator f2 = materialize_word(inverse_word(rb.b), RepSpace::PC, "spin2(12)");
    GroupOperator g1 = embed(inner6.factors[0].op, RepSpace::PC);
    GroupOperator g2 = embed(inner6.factors[1].op, RepSpace::PC);
    GroupOperator g3 = embed(inner6.factors[2].op, RepSpace::PC);
    GroupOperator f3 = materialize_word(inverse_word(rb.c), RepSpace::PC) * g1;
    f3.claim = "spin1(12)";
    f2.claim = "spin2(12)";
    f1.claim = "spin1(12)";
    g2.claim = "spin2(12)";
    g3.claim = "spin1(12)";
    Word w3 = inverse_word(rb.c);
    w3.insert(w3.end(), inner6.factors[0].word.begin(), inner6.factors[0].word.end());
    seq.factors.push_back({spin_label(0, 12), inverse_word(rb.a), f1});
    seq.factors.push_back({spin_label(1, 12), inverse_word(rb.b), f2});
    seq.factors.push_back({spin_label(0, 12), w3, f3});
    seq.factors.push_back({spin_label(1, 12), inner6.factors[1].word, g2});
    seq.factors.push_back({spin_label(0, 12), {}, g3});
    double recon = (f1.m * f2.m * f3.m * g2.m * g3.m - op.m).norm();
    if (recon > std::max(tol, 1e-6) * 56) {
      if (attempt == 9) throw VerificationFailed("reconstruction residual too large");
      continue;
    }
    return seq;
  }
  throw VerificationFailed("branch retries exhausted");
}

DecompositionReport verify_decomposition(const GroupOperator& op, const FactorSequence& seq) {
  DecompositionReport rep;
  if (seq.factors.empty()) return rep;
  Eigen::MatrixXcd prod =
      Eigen::MatrixXcd::Identity(seq.factors[0].op.dim(), seq.factors[0].op.dim());
  for (const Factor& f : seq.factors) prod = prod * f.op.m;
  rep.reconstruction = (prod - op.m).norm();
  std::vector<int> want;
  if (seq.factors.size() == 3) want = {0, 1, 0};
  if (seq.factors.size() == 5) want = {0, 1, 0, 1, 0};
  rep.label_pattern_ok = !want.empty();
  for (size_t i = 0; i < seq.factors.size(); ++i) {
    std::string claim = seq.factors[i].label;
    for (char& ch : claim) ch = char(std::tolower(ch));
    MembershipReport m = membership_residual(seq.factors[i].op, claim);
    rep.factor_membership.push_back(m.residual);
    rep.factor_fix.push_back(m.fix_residual);
    if (!want.empty() && i < want.size()) {
      if (claim.size() > 4 && claim[4] - '1' != want[i]) rep.label_pattern_ok = false;
    }
  }
  return rep;
}

}  // namespace spinor
