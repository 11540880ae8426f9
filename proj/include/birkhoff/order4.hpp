/*
 * order4.hpp — complex coordinates on 4x4 matrices with unit row and column
 * sums: W(u, w2, w3, w4, x) = B* + x X + 2 Re[u D1 + w2 D2 + w3 D3 + w4 D4].
 *
 * The nine real parameters match the dimension of W4, so inversion is a
 * square (after affine reduction) linear solve against the transcribed
 * basis.  The 3x3 arrangement rep3 is checked for multiplicativity rather
 * than assumed.
 */

#pragma once

#include "birkhoff/polytope3.hpp"

namespace birkhoff {

using Matrix4 = Eigen::Matrix4d;
using Matrix4c = Eigen::Matrix4cd;

struct Coord4 {
  Complex u{0.0, 0.0};
  Complex w2{0.0, 0.0};
  Complex w3{0.0, 0.0};
  Complex w4{0.0, 0.0};
  double x = 0.0;
};

struct BasisSet4 {
  Matrix4 b_star;
  Matrix4 x_mat;
  Matrix4c d1, d2, d3, d4;
};

const BasisSet4& basis4();

/// Zero row/column sums of X and D1..D4; unit sums for B*.  Exact check of
/// the transcription (entries are quarters, so the sums are exact).
bool basis4_sums_ok();

bool in_w4(const Matrix4& m, double eps = kDefaultEps);

Matrix4 from_coords4(const Coord4& c);

/// Least-squares inversion over the affine basis; throws std::domain_error
/// when m fails the in-W4 predicate.
Coord4 to_coords4(const Matrix4& m, double eps = kDefaultEps);

/// The displayed arrangement [[u, conj(w3), w4], [w3, conj(u), conj(w4)],
/// [w2, conj(w2), x]].
Eigen::Matrix3cd rep3(const Coord4& c);

/// Max over `pairs` random coordinate pairs of
/// ||rep3(c1 c2) - rep3(c1) rep3(c2)||_inf, products taken through the 4x4
/// matrices.  Reported, not assumed.
double rep3_multiplicativity_residual(int pairs, unsigned seed);

}  // namespace birkhoff
