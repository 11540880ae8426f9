#include "birkhoff/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace birkhoff {

namespace {

// Real nth roots of lam.
void real_nth_roots(double lam, int n, std::vector<double>& out) {
  out.clear();
  if (lam == 0.0) {
    out.push_back(0.0);
    return;
  }
  const double r = std::pow(std::abs(lam), 1.0 / n);
  if (lam > 0.0) {
    out.push_back(r);
    if (n % 2 == 0) out.push_back(-r);
  } else if (n % 2 == 1) {
    out.push_back(-r);
  }
}

Matrix3 matrix_power(const Matrix3& m, int n) {
  Matrix3 p = Matrix3::Identity();
  for (int i = 0; i < n; ++i) p = p * m;
  return p;
}

}  // namespace

std::vector<HalfPlaneCoord> nth_roots(const HalfPlaneCoord& h, int n, double eps) {
  if (n < 1) throw std::domain_error("nth_roots: n must be positive");
  const Matrix3 target = from_coords(coord_of(h));
  std::vector<HalfPlaneCoord> out;

  auto try_candidate = [&](double a, double b, double phi) {
    if (b < 0.0) {
      b = -b;
      phi += kPi;
    }
    HalfPlaneCoord cand{normalize_angle(phi), a, b, b == 0.0};
    const Matrix3 root = from_coords(coord_of(cand));
    if (!is_bistochastic(root, eps)) return;
    if ((matrix_power(root, n) - target).cwiseAbs().maxCoeff() >= 1e-9) return;
    for (const HalfPlaneCoord& r : out) {
      if (std::abs(r.a - cand.a) < 1e-12 && std::abs(r.b - cand.b) < 1e-12 &&
          std::abs(r.phi - cand.phi) < 1e-12) {
        return;
      }
    }
    out.push_back(cand);
  };

  std::vector<double> roots_plus, roots_minus;
  if (h.b > eps) {
    real_nth_roots(h.a + h.b, n, roots_plus);
    real_nth_roots(h.a - h.b, n, roots_minus);
    for (double mp : roots_plus) {
      for (double mm : roots_minus) {
        try_candidate(0.5 * (mp + mm), 0.5 * (mp - mm), h.phi);
      }
    }
  } else {
    // Degenerate eigenvalue a: symmetric roots need not share the input's
    // half-plane.  Sweep candidate half-planes; the three f = 1 angles are
    // where a split root survives longest, so always include them.
    real_nth_roots(h.a, n, roots_plus);
    std::vector<double> phis = {0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0};
    for (int k = 0; k < 48; ++k) phis.push_back(kTwoPi * k / 48.0);
    for (double mp : roots_plus) {
      for (double mm : roots_plus) {
        if (mp == mm) {
          try_candidate(mp, 0.0, 0.0);
        } else {
          for (double phi : phis) try_candidate(0.5 * (mp + mm), 0.5 * (mp - mm), phi);
        }
      }
    }
  }
  return out;
}

bool is_inf_divisible(const HalfPlaneCoord& h, int n_max, double eps) {
  for (int n = 2; n <= n_max; ++n) {
    if (nth_roots(h, n, eps).empty()) return false;
  }
  return true;
}

bool generator_cone_check(double theta, double phi, double tol) {
  const BasisSet3& b = basis3();
  const Matrix3c z =
      Complex(-std::cos(theta), 0.0) * b.m1 + std::polar(std::sin(theta), phi) * b.m2;
  const Matrix3 l = (2.0 / 3.0) * z.real();
  double min_off = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) min_off = std::min(min_off, l(i, j));
  return min_off >= -tol;
}

double f_numeric(double phi, double tol) {
  if (tol <= 0.0) throw std::domain_error("f_numeric: tol must be positive");
  // Cone membership is an interval in theta starting at 0; bisect its edge.
  double lo = 0.0;   // passes (flat decay is interior)
  double hi = 1.2;   // fails everywhere: f never exceeds 1
  while (hi - lo > 0.1 * tol) {
    const double mid = 0.5 * (lo + hi);
    if (generator_cone_check(std::atan(mid), phi)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace birkhoff
