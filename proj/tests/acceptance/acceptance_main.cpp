// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned in code next to the check it gates.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "birkhoff/classifier.hpp"
#include "birkhoff/oracle.hpp"
#include "birkhoff/order4.hpp"
#include "birkhoff/qubit.hpp"
#include "birkhoff/semigroups.hpp"
#include "birkhoff/sweep.hpp"

using namespace birkhoff;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, name,
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

Matrix3 permutation(int r0, int r1, int r2) {
  Matrix3 m = Matrix3::Zero();
  m(0, r0) = 1.0;
  m(1, r1) = 1.0;
  m(2, r2) = 1.0;
  return m;
}

Matrix3 power(const Matrix3& m, int n) {
  Matrix3 p = Matrix3::Identity();
  for (int i = 0; i < n; ++i) p = p * m;
  return p;
}

// 1. Table of permutation matrices converts both ways to 1e-14.
void criterion1() {
  const Complex o = basis3().omega;
  const struct {
    Matrix3 m;
    CoordUW c;
  } table[] = {
      {permutation(0, 1, 2), {Complex(1, 0), {}}},
      {permutation(1, 0, 2), {{}, Complex(1, 0)}},
      {permutation(1, 2, 0), {o * o, {}}},
      {permutation(2, 1, 0), {{}, o * o}},
      {permutation(2, 0, 1), {o, {}}},
      {permutation(0, 2, 1), {{}, o}},
  };
  double worst = 0.0;
  for (const auto& row : table) {
    worst = std::max(worst, (from_coords(row.c) - row.m).cwiseAbs().maxCoeff());
    const CoordUW c = to_coords(row.m);
    worst = std::max(worst, std::abs(c.u - row.c.u));
    worst = std::max(worst, std::abs(c.w - row.c.w));
  }
  report(1, "permutation table reproduction", worst < 1e-14, "max error " + fmt(worst));
}

// 2. Roundtrip for 1e4 random coordinates, orders 3 and 4, to 1e-12.
void criterion2() {
  std::mt19937 rng(1001);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double worst3 = 0.0, worst4 = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const CoordUW c{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
    const CoordUW back = to_coords(from_coords(c));
    worst3 = std::max({worst3, std::abs(back.u - c.u), std::abs(back.w - c.w)});
  }
  for (int k = 0; k < 10000; ++k) {
    Coord4 c;
    c.u = Complex(d(rng), d(rng));
    c.w2 = Complex(d(rng), d(rng));
    c.w3 = Complex(d(rng), d(rng));
    c.w4 = Complex(d(rng), d(rng));
    c.x = d(rng);
    const Coord4 back = to_coords4(from_coords4(c));
    worst4 = std::max({worst4, std::abs(back.u - c.u), std::abs(back.w2 - c.w2),
                       std::abs(back.w3 - c.w3), std::abs(back.w4 - c.w4),
                       std::abs(back.x - c.x)});
  }
  report(2, "coordinate roundtrip (orders 3 and 4)", worst3 < 1e-12 && worst4 < 1e-12,
         "order3 " + fmt(worst3) + ", order4 " + fmt(worst4));
}

// 3. rep2 homomorphism over 1e3 pairs to 1e-12; spectrum vs eigenvalues to 1e-9.
void criterion3() {
  std::mt19937 rng(1003);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double worst_hom = 0.0, worst_spec = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const CoordUW c1{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
    const CoordUW c2{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
    const CoordUW c12 = to_coords(from_coords(c1) * from_coords(c2), 1e-6);
    const Rep2 res = rep2(c12) - rep2(c1) * rep2(c2);
    worst_hom = std::max(worst_hom, res.cwiseAbs().maxCoeff());

    auto expected = spectrum(c1);
    Eigen::EigenSolver<Matrix3> solver(from_coords(c1));
    std::array<Complex, 3> got{solver.eigenvalues()(0), solver.eigenvalues()(1),
                               solver.eigenvalues()(2)};
    for (const Complex& e : expected) {
      double best = 1e300;
      std::size_t bi = 0;
      for (std::size_t i = 0; i < got.size(); ++i) {
        if (std::abs(got[i] - e) < best) {
          best = std::abs(got[i] - e);
          bi = i;
        }
      }
      worst_spec = std::max(worst_spec, best);
      got[bi] = Complex(1e300, 0.0);
    }
  }
  report(3, "rep2 homomorphism and spectrum", worst_hom < 1e-12 && worst_spec < 1e-9,
         "hom " + fmt(worst_hom) + ", spectrum " + fmt(worst_spec));
}

// 4. Closed-form semigroup vs reference exponential on the stated grid, 1e-8.
void criterion4() {
  double worst = 0.0;
  bool degenerate_hit = false;
  for (int ia = 0; ia <= 8; ++ia) {
    const double a = -2.0 + 0.5 * ia;
    for (int ib = 0; ib <= 8; ++ib) {
      const double babs = 0.25 * ib;
      for (const double arg : {0.0, kPi / 6.0, kPi / 3.0, kPi}) {
        const SemigroupSpec spec{a, std::polar(babs, arg)};
        if (std::abs(std::abs(spec.b) - std::abs(a)) < 1e-12 && babs > 0.0) {
          degenerate_hit = true;
        }
        const Generator3 l = generator(spec);
        for (int it = 0; it <= 10; ++it) {
          const double t = 0.5 * it;
          const Matrix3 closed = from_coords(general_point(spec, t));
          const Matrix3 reference = expm(l, t);
          worst = std::max(worst, (closed - reference).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  report(4, "semigroup/exponential equivalence", worst < 1e-8 && degenerate_hit,
         "max deviation " + fmt(worst) +
             (degenerate_hit ? ", |a| = |b| branch included" : ", grid missed |a| = |b|"));
}

// 5. f(phi) closed form vs the cone reconstruction over 720 angles, 1e-6;
//    seam continuity to 1e-12.
void criterion5() {
  const auto numeric = boundary_sweep(720, ExecMode::kParallel);
  double worst = 0.0;
  for (int i = 0; i < 720; ++i) {
    const double phi = kTwoPi * i / 720.0;
    worst = std::max(worst, std::abs(numeric[i] - boundary_f(phi)));
  }
  const double seam1 = std::abs(0.5 / std::cos(2.0 * kPi / 3.0 - kPi / 3.0) +
                                0.5 / std::cos(2.0 * kPi / 3.0));
  const double seam2 = std::abs(-0.5 / std::cos(4.0 * kPi / 3.0) -
                                0.5 / std::cos(4.0 * kPi / 3.0 + kPi / 3.0));
  report(5, "boundary function reconstruction",
         worst < 1e-6 && seam1 < 1e-12 && seam2 < 1e-12,
         "max |f - f_numeric| " + fmt(worst) + ", seams " + fmt(std::max(seam1, seam2)));
}

// 6. The bistochastic-but-not-positive-definite representative.
void criterion6() {
  const double e = std::exp(-std::sqrt(3.0) * kPi);
  const CoordUW c{Complex(-e, 0.0), {}};
  const Matrix3 m = from_coords(c);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double expected = (i == j) ? (1.0 - 2.0 * e) / 3.0 : (1.0 + e) / 3.0;
      worst = std::max(worst, std::abs(m(i, j) - expected));
    }
  }
  const SemigroupSpec circulant{1.0 / std::sqrt(3.0), {}};
  const CoordUW on_curve = general_point(circulant, std::sqrt(3.0) * kPi);
  const double curve_dist =
      std::max(std::abs(on_curve.u - c.u), std::abs(on_curve.w - c.w));
  const Classification verdict = classify(half_plane_of(c), 1e-9);
  const bool trajectory_ok = stays_bistochastic(circulant, 20.0, 800, 1e-9);
  const bool pass = worst < 1e-12 && curve_dist < 1e-12 && verdict.in_b3sym &&
                    !verdict.positive_semidefinite &&
                    verdict.markov_class == MarkovClass::kNotMarkov && trajectory_ok;
  report(6, "circulant counterexample", pass,
         "matrix " + fmt(worst) + ", on-curve " + fmt(curve_dist) + ", class " +
             to_string(verdict.markov_class) + ", trajectory bistochastic " +
             (trajectory_ok ? "yes" : "no"));
}

// 7. Classifier vs truncated divisibility oracle on a dense grid, plus the
//    divisible segments.  Consistency means: Markov-or-divisible verdicts are
//    divisible, and a < b points are not; grid points within 1e-6 of a region
//    boundary (a = b, tan th = f, triangle edge) are excluded.
void criterion7() {
  const double margin = 1e-6;
  int tested = 0, inconsistent = 0, iff_disagreements = 0;
  for (int pi = 0; pi < 30; ++pi) {
    const double phi = kTwoPi * pi / 30.0;
    const double f = boundary_f(phi);
    for (int ai = 0; ai < 27; ++ai) {
      for (int bi = 0; bi < 27; ++bi) {
        const double a = -0.5 + 1.5 * (ai + 0.5) / 27.0;
        const double b = f * (bi + 0.5) / 27.0;
        const HalfPlaneCoord h{phi, a, b, false};
        const Matrix3 m = from_coords(coord_of(h));
        if (!is_bistochastic(m, 1e-9)) continue;
        if (m.minCoeff() < margin) continue;             // triangle edge
        if (std::abs(a - b) < margin) continue;          // diagonal
        if (a > b) {
          const double tan_theta = theta_of(a, b);
          if (std::abs(tan_theta - f) < margin) continue;  // cone edge
        }
        ++tested;
        const MarkovClass verdict = classify(h, 1e-9).markov_class;
        const bool divisible = is_inf_divisible(h, 12, 1e-9);
        if (!verdicts_consistent(verdict, a, b, divisible, 1e-9)) ++inconsistent;
        if ((verdict != MarkovClass::kNotMarkov) != divisible) ++iff_disagreements;
      }
    }
  }

  bool segments_ok = true;
  for (const double phi : {0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0}) {
    for (int i = 0; i <= 8; ++i) {
      const double x = 0.05 + 0.05 * i;  // 0.05 .. 0.45
      const HalfPlaneCoord h{phi, x, x, false};
      if (classify(h, 1e-9).markov_class != MarkovClass::kDivisibleNotMarkovLimit) {
        segments_ok = false;
      }
      if (!is_inf_divisible(h, 12, 1e-9)) segments_ok = false;
      const Matrix3 target = from_coords(coord_of(h));
      for (int n = 2; n <= 12; ++n) {
        bool verified = false;
        for (const auto& r : nth_roots(h, n, 1e-9)) {
          if ((power(from_coords(coord_of(r)), n) - target).cwiseAbs().maxCoeff() < 1e-9) {
            verified = true;
          }
        }
        if (!verified) segments_ok = false;
      }
    }
  }
  report(7, "classifier/oracle agreement", tested >= 10000 && inconsistent == 0 && segments_ok,
         std::to_string(tested) + " grid points, " + std::to_string(inconsistent) +
             " inconsistent, segments " + (segments_ok ? "verified" : "FAILED") +
             "; unconditional-iff gaps (truncated oracle, informational): " +
             std::to_string(iff_disagreements));
}

// 8. theta_of recovers tan theta from sym_point coordinates, 1e-10.
void criterion8() {
  std::mt19937 rng(1008);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double theta = (kPi / 2.0 - 1e-3) * d(rng);
    const double t = 1e-3 + 3.0 * d(rng);
    const CoordUW p = sym_point(theta, kTwoPi * d(rng), t);
    worst = std::max(worst,
                     std::abs(theta_of(p.u.real(), std::abs(p.w)) - std::tan(theta)));
  }
  report(8, "tan theta identity", worst < 1e-10, "max error " + fmt(worst));
}

// 9. arg w is conserved: strict equality on the sign-definite window, and w
//    stays on the line through b for unrestricted times.
void criterion9() {
  std::mt19937 rng(1009);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  double worst_arg = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double babs = 1e-3 + 2.0 * d(rng);
    const double a = 4.0 * d(rng) - 2.0;
    const double arg_b = kTwoPi * d(rng) - kPi;
    const SemigroupSpec spec{a, std::polar(babs, arg_b)};
    double t_cap = 5.0;
    if (std::abs(a) > babs) {
      // Trigonometric branch: stay inside the first half-period, where the
      // scalar factor on b is positive.
      const double gamma = std::sqrt(a * a - babs * babs);
      t_cap = std::min(t_cap, 0.999 * kPi / gamma);
    }
    const double t = t_cap * (0.01 + 0.99 * d(rng));
    const CoordUW p = general_point(spec, t);
    double diff = std::abs(std::arg(p.w) - arg_b);
    diff = std::min(diff, kTwoPi - diff);
    worst_arg = std::max(worst_arg, diff);
  }
  double worst_line = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const SemigroupSpec spec{4.0 * d(rng) - 2.0,
                             std::polar(1e-3 + 2.0 * d(rng), kTwoPi * d(rng))};
    const double t = 5.0 * d(rng);
    const CoordUW p = general_point(spec, t);
    const double scale = std::max(1.0, std::abs(p.w) * std::abs(spec.b));
    worst_line = std::max(worst_line,
                          std::abs(std::imag(p.w * std::conj(spec.b))) / scale);
  }
  report(9, "conserved arg w", worst_arg < 1e-12 && worst_line < 1e-12,
         "arg " + fmt(worst_arg) + ", line " + fmt(worst_line));
}

// 10. Qubit bridge identities to 1e-12.
void criterion10() {
  std::mt19937 rng(1010);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  double worst_res = 0.0, worst_comp = 0.0, worst_shadow = 0.0;
  for (int k = 0; k < 500; ++k) {
    const double s = 2.0 * d(rng);
    RateVector v{s * (0.5 + 0.5 * d(rng)), s * (0.5 + 0.5 * d(rng)),
                 s * (0.5 + 0.5 * d(rng))};
    const double t1 = 3.0 * d(rng), t2 = 3.0 * d(rng);
    worst_res = std::max(worst_res, consistency_residual(v, t1));
    worst_res = std::max(worst_res, consistency_residual({3.0 * d(rng), 3.0 * d(rng), 3.0 * d(rng)}, t2));

    const auto l12 = transfer_eigenvalues(
        compose_channels(markov_family(v, t2), markov_family(v, t1)));
    const auto ldirect = transfer_eigenvalues(markov_family(v, t1 + t2));
    for (int i = 0; i < 3; ++i) {
      worst_comp = std::max(worst_comp, std::abs(l12[i] - ldirect[i]));
    }

    const double lam = std::exp(-v.vz * t1);
    Eigen::Matrix2d expected;
    expected << 1.0 + lam, 1.0 - lam, 1.0 - lam, 1.0 + lam;
    expected *= 0.5;
    worst_shadow = std::max(worst_shadow, (to_classical(markov_family(v, t1)) - expected)
                                              .cwiseAbs()
                                              .maxCoeff());
  }
  report(10, "qubit bridge", worst_res < 1e-12 && worst_comp < 1e-12 && worst_shadow < 1e-12,
         "residual " + fmt(worst_res) + ", composition " + fmt(worst_comp) + ", shadow " +
             fmt(worst_shadow));
}

// 11. Order-4 basis self-test, roundtrip (covered again here), and the rep3
//     multiplicativity verdict.
void criterion11() {
  const bool sums_ok = basis4_sums_ok();
  std::mt19937 rng(1011);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double worst_rt = 0.0;
  for (int k = 0; k < 2000; ++k) {
    Coord4 c;
    c.u = Complex(d(rng), d(rng));
    c.w2 = Complex(d(rng), d(rng));
    c.w3 = Complex(d(rng), d(rng));
    c.w4 = Complex(d(rng), d(rng));
    c.x = d(rng);
    const Coord4 back = to_coords4(from_coords4(c));
    worst_rt = std::max({worst_rt, std::abs(back.u - c.u), std::abs(back.w2 - c.w2),
                         std::abs(back.w3 - c.w3), std::abs(back.w4 - c.w4),
                         std::abs(back.x - c.x)});
  }
  const double residual = rep3_multiplicativity_residual(1000, 424242u);
  const bool multiplicative = residual < 1e-10;
  report(11, "order-4 parametrization and rep3",
         sums_ok && worst_rt < 1e-12 && multiplicative,
         std::string("basis sums ") + (sums_ok ? "exact" : "FAILED") + ", roundtrip " +
             fmt(worst_rt) + ", rep3 residual " + fmt(residual) +
             (multiplicative ? " (representation claim holds)"
                             : " (DEVIATION: claim fails, see report)"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
