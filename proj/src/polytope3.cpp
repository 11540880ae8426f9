#include "birkhoff/polytope3.hpp"

#include <cmath>
#include <stdexcept>

namespace birkhoff {

namespace {

BasisSet3 make_basis() {
  BasisSet3 b;
  const double s3 = std::sqrt(3.0) / 2.0;
  b.omega = Complex(-0.5, s3);
  const Complex o = b.omega;
  const Complex o2 = std::conj(o);  // omega^2 exactly, no multiplication rounding
  b.b_star.setConstant(1.0 / 3.0);
  b.m1 << 1.0, o, o2,
          o2, 1.0, o,
          o, o2, 1.0;
  b.m2 << o2, 1.0, o,
          1.0, o, o2,
          o, o2, 1.0;

  const auto ip = [](const Matrix3c& x, const Matrix3c& y) {
    return (x.conjugate().cwiseProduct(y)).sum();
  };
  const double tol = 1e-12;
  b.orthogonality_ok =
      std::abs(ip(b.m1, b.m1) - 9.0) < tol &&
      std::abs(ip(b.m2, b.m2) - 9.0) < tol &&
      std::abs(ip(b.m1, b.m2)) < tol &&
      std::abs(ip(b.m1, b.m1.conjugate())) < tol &&
      std::abs(ip(b.m1, b.m2.conjugate())) < tol &&
      std::abs(ip(b.m2, b.m2.conjugate())) < tol &&
      std::abs(ip(b.m1, b.b_star.cast<Complex>())) < tol &&
      std::abs(ip(b.m2, b.b_star.cast<Complex>())) < tol;
  return b;
}

}  // namespace

const BasisSet3& basis3() {
  static const BasisSet3 b = make_basis();
  return b;
}

double normalize_angle(double phi) {
  double x = std::fmod(phi, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  if (x >= kTwoPi) x = 0.0;
  return x;
}

bool in_w3(const Matrix3& m, double eps) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(m.row(i).sum() - 1.0) > eps) return false;
    if (std::abs(m.col(i).sum() - 1.0) > eps) return false;
  }
  return true;
}

bool is_bistochastic(const Matrix3& m, double eps) {
  return in_w3(m, eps) && m.minCoeff() >= -eps;
}

bool is_symmetric_matrix(const Matrix3& m, double eps) {
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= eps;
}

Matrix3 from_coords(const CoordUW& c) {
  const BasisSet3& b = basis3();
  return b.b_star + (2.0 / 3.0) * ((c.u * b.m1).real() + (c.w * b.m2).real());
}

CoordUW to_coords(const Matrix3& m, double eps) {
  if (!in_w3(m, eps)) {
    throw std::domain_error("to_coords: matrix is not in W3 (row/column sums differ from 1)");
  }
  const BasisSet3& b = basis3();
  if (!b.orthogonality_ok) return to_coords_solve(m, eps);
  const Matrix3c mc = m.cast<Complex>();
  CoordUW c;
  c.u = b.m1.conjugate().cwiseProduct(mc).sum() / 3.0;
  c.w = b.m2.conjugate().cwiseProduct(mc).sum() / 3.0;
  return c;
}

CoordUW to_coords_solve(const Matrix3& m, double eps) {
  if (!in_w3(m, eps)) {
    throw std::domain_error("to_coords_solve: matrix is not in W3");
  }
  // Columns: d from_coords / d(Re u, Im u, Re w, Im w), flattened row-major.
  struct Solver {
    Eigen::Matrix<double, 9, 4> a;
    Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 9, 4>> qr;
  };
  static const Solver solver = [] {
    const BasisSet3& b = basis3();
    const Matrix3 d_re_u = (2.0 / 3.0) * b.m1.real();
    const Matrix3 d_im_u = -(2.0 / 3.0) * b.m1.imag();
    const Matrix3 d_re_w = (2.0 / 3.0) * b.m2.real();
    const Matrix3 d_im_w = -(2.0 / 3.0) * b.m2.imag();
    Solver s;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const int k = 3 * i + j;
        s.a(k, 0) = d_re_u(i, j);
        s.a(k, 1) = d_im_u(i, j);
        s.a(k, 2) = d_re_w(i, j);
        s.a(k, 3) = d_im_w(i, j);
      }
    }
    s.qr = s.a.colPivHouseholderQr();
    return s;
  }();

  Eigen::Matrix<double, 9, 1> rhs;
  const Matrix3 diff = m - basis3().b_star;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rhs(3 * i + j) = diff(i, j);
  const Eigen::Vector4d x = solver.qr.solve(rhs);
  return CoordUW{Complex(x(0), x(1)), Complex(x(2), x(3))};
}

Rep2 rep2(const CoordUW& c) {
  Rep2 r;
  r << c.u, std::conj(c.w),
       c.w, std::conj(c.u);
  return r;
}

CoordUW compose(const CoordUW& c1, const CoordUW& c2) {
  return CoordUW{c1.u * c2.u + std::conj(c1.w) * c2.w,
                 c1.w * c2.u + std::conj(c1.u) * c2.w};
}

std::array<Complex, 3> spectrum(const CoordUW& c) {
  // Roots of x^2 - 2 Re(u) x + (|u|^2 - |w|^2); discriminant/4 reduces to
  // |w|^2 - Im(u)^2.
  const double re_u = c.u.real();
  const double d = std::norm(c.w) - c.u.imag() * c.u.imag();
  Complex lp, lm;
  if (d >= 0.0) {
    const double r = std::sqrt(d);
    lp = Complex(re_u + r, 0.0);
    lm = Complex(re_u - r, 0.0);
  } else {
    const double r = std::sqrt(-d);
    lp = Complex(re_u, r);
    lm = Complex(re_u, -r);
  }
  return {Complex(1.0, 0.0), lp, lm};
}

HalfPlaneCoord half_plane_of(const CoordUW& c, double eps) {
  if (std::abs(c.u.imag()) > eps) {
    throw std::domain_error(
        "half_plane_of: Property 2 violated (Im u != 0, matrix not symmetric)");
  }
  HalfPlaneCoord h;
  h.a = c.u.real();
  h.b = std::abs(c.w);
  if (h.b <= eps) {
    h.phi = 0.0;
    h.b = std::abs(c.w);  // keep the (tiny) magnitude as-is
    h.any_phi = true;
  } else {
    h.phi = normalize_angle(std::arg(c.w));
  }
  return h;
}

CoordUW coord_of(const HalfPlaneCoord& h) {
  return CoordUW{Complex(h.a, 0.0), std::polar(h.b, h.phi)};
}

double boundary_f(double phi) {
  const double x = normalize_angle(phi);
  // Shifted secants evaluated by angle addition: cos(x -+ pi/3) =
  // cos(x)/2 +- sin(x) sqrt(3)/2.  Keeps the f = 1 peaks exact.
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double h = std::sqrt(3.0) / 2.0;
  if (x <= 2.0 * kPi / 3.0) return 0.5 / (0.5 * c + h * s);
  if (x <= 4.0 * kPi / 3.0) return -0.5 / c;
  return 0.5 / (0.5 * c - h * s);
}

std::array<CoordUW, 3> bistochastic_extreme_points(double phi) {
  const double p = normalize_angle(phi);
  return {CoordUW{Complex(-0.5, 0.0), Complex(0.0, 0.0)},
          CoordUW{Complex(1.0, 0.0), Complex(0.0, 0.0)},
          CoordUW{Complex(0.0, 0.0), std::polar(boundary_f(p), p)}};
}

bool is_positive_definite(const HalfPlaneCoord& h, double eps) {
  return h.a - h.b > eps;
}

bool is_positive_semidefinite(const HalfPlaneCoord& h, double eps) {
  return h.a - h.b >= -eps;
}

}  // namespace birkhoff
