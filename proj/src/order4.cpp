#include "birkhoff/order4.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace birkhoff {

namespace {

BasisSet4 make_basis4() {
  BasisSet4 b;
  const Complex i(0.0, 1.0);
  b.b_star.setConstant(0.25);
  b.x_mat << 1, -1, 1, -1,
             -1, 1, -1, 1,
             1, -1, 1, -1,
             -1, 1, -1, 1;
  b.x_mat *= 0.25;
  b.d1 << 1.0, i, -1.0, -i,
          -i, 1.0, i, -1.0,
          -1.0, -i, 1.0, i,
          i, -1.0, -i, 1.0;
  b.d2 << -i, 1.0, i, -1.0,
          i, -1.0, -i, 1.0,
          -i, 1.0, i, -1.0,
          i, -1.0, -i, 1.0;
  b.d3 << -1.0, -i, 1.0, i,
          -i, 1.0, i, -1.0,
          1.0, i, -1.0, -i,
          i, -1.0, -i, 1.0;
  b.d4 << i, -i, i, -i,
          1.0, -1.0, 1.0, -1.0,
          -i, i, -i, i,
          -1.0, 1.0, -1.0, 1.0;
  b.d1 *= 0.25;
  b.d2 *= 0.25;
  b.d3 *= 0.25;
  b.d4 *= 0.25;
  return b;
}

// 16x9 matrix of the real parameter directions, plus its decomposition.
struct Solver4 {
  Eigen::Matrix<double, 16, 9> a;
  Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 16, 9>> qr;
};

const Solver4& solver4() {
  static const Solver4 s = [] {
    Solver4 sv;
    const BasisSet4& b = basis4();
    const Matrix4c* ds[4] = {&b.d1, &b.d2, &b.d3, &b.d4};
    for (int p = 0; p < 4; ++p) {
      const Matrix4 re_dir = 2.0 * ds[p]->real();   // d/d Re(coeff)
      const Matrix4 im_dir = -2.0 * ds[p]->imag();  // d/d Im(coeff)
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          sv.a(4 * i + j, 2 * p) = re_dir(i, j);
          sv.a(4 * i + j, 2 * p + 1) = im_dir(i, j);
        }
      }
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sv.a(4 * i + j, 8) = b.x_mat(i, j);
    sv.qr = sv.a.colPivHouseholderQr();
    return sv;
  }();
  return s;
}

}  // namespace

const BasisSet4& basis4() {
  static const BasisSet4 b = make_basis4();
  return b;
}

bool basis4_sums_ok() {
  const BasisSet4& b = basis4();
  for (int i = 0; i < 4; ++i) {
    if (b.b_star.row(i).sum() != 1.0 || b.b_star.col(i).sum() != 1.0) return false;
    if (b.x_mat.row(i).sum() != 0.0 || b.x_mat.col(i).sum() != 0.0) return false;
    for (const Matrix4c* d : {&b.d1, &b.d2, &b.d3, &b.d4}) {
      if (d->row(i).sum() != Complex(0.0, 0.0)) return false;
      if (d->col(i).sum() != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

bool in_w4(const Matrix4& m, double eps) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(m.row(i).sum() - 1.0) > eps) return false;
    if (std::abs(m.col(i).sum() - 1.0) > eps) return false;
  }
  return true;
}

Matrix4 from_coords4(const Coord4& c) {
  const BasisSet4& b = basis4();
  const Matrix4c z = c.u * b.d1 + c.w2 * b.d2 + c.w3 * b.d3 + c.w4 * b.d4;
  return b.b_star + c.x * b.x_mat + 2.0 * z.real();
}

Coord4 to_coords4(const Matrix4& m, double eps) {
  if (!in_w4(m, eps)) {
    throw std::domain_error("to_coords4: matrix is not in W4 (row/column sums differ from 1)");
  }
  Eigen::Matrix<double, 16, 1> rhs;
  const Matrix4 diff = m - basis4().b_star;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rhs(4 * i + j) = diff(i, j);
  const Eigen::Matrix<double, 9, 1> x = solver4().qr.solve(rhs);
  Coord4 c;
  c.u = Complex(x(0), x(1));
  c.w2 = Complex(x(2), x(3));
  c.w3 = Complex(x(4), x(5));
  c.w4 = Complex(x(6), x(7));
  c.x = x(8);
  return c;
}

Eigen::Matrix3cd rep3(const Coord4& c) {
  Eigen::Matrix3cd r;
  r << c.u, std::conj(c.w3), c.w4,
       c.w3, std::conj(c.u), std::conj(c.w4),
       c.w2, std::conj(c.w2), Complex(c.x, 0.0);
  return r;
}

double rep3_multiplicativity_residual(int pairs, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const auto random_coord = [&] {
    Coord4 c;
    c.u = Complex(dist(rng), dist(rng));
    c.w2 = Complex(dist(rng), dist(rng));
    c.w3 = Complex(dist(rng), dist(rng));
    c.w4 = Complex(dist(rng), dist(rng));
    c.x = dist(rng);
    return c;
  };
  double worst = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const Coord4 c1 = random_coord();
    const Coord4 c2 = random_coord();
    const Coord4 c12 = to_coords4(from_coords4(c1) * from_coords4(c2), 1e-6);
    const Eigen::Matrix3cd res = rep3(c12) - rep3(c1) * rep3(c2);
    worst = std::max(worst, res.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace birkhoff
