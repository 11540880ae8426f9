/*
 * polytope3.hpp — complex coordinates on the set of 3x3 matrices with unit
 * row and column sums.
 *
 * Every such matrix is an affine image of a pair of complex numbers (u, w):
 *
 *   W(u,w) = B* + (2/3) Re[u M1] + (2/3) Re[w M2]
 *
 * with B* the uniform 1/3 matrix and M1, M2 fixed matrices built from the
 * cube root of unity O = exp(i 2pi/3).  The map is a bijection; the inverse
 * is a Frobenius inner product against conj(M1), conj(M2).
 *
 * The coordinate pair multiplies like the 2x2 matrix [[u, conj(w)], [w,
 * conj(u)]], so matrix products in the 3x3 picture reduce to a handful of
 * complex operations.  Symmetric matrices are exactly the points with real
 * u; fixing arg(w) = phi selects a half-plane closed under multiplication,
 * on which the bistochastic region is the triangle spanned by (-1/2, 0),
 * (1, 0) and (0, f(phi) e^{i phi}).
 */

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace birkhoff {

using Complex = std::complex<double>;
using Matrix3 = Eigen::Matrix3d;
using Matrix3c = Eigen::Matrix3cd;
using Rep2 = Eigen::Matrix2cd;

inline constexpr double kDefaultEps = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Complex coordinate pair identifying a point of W3.
struct CoordUW {
  Complex u{0.0, 0.0};
  Complex w{0.0, 0.0};
};

/// Coordinates inside a half-plane of symmetric matrices: u = a real,
/// w = b e^{i phi} with b >= 0.  Points with w = 0 belong to every
/// half-plane; they carry any_phi = true and the canonical phi = 0.
struct HalfPlaneCoord {
  double phi = 0.0;
  double a = 0.0;
  double b = 0.0;
  bool any_phi = false;
};

/// Basis of the parametrization.  Cached as a singleton; the inner-product
/// relations below are verified numerically once before the closed-form
/// coordinate extraction is trusted.
struct BasisSet3 {
  Complex omega;     // exp(i 2pi/3)
  Matrix3 b_star;    // uniform 1/3 matrix
  Matrix3c m1;
  Matrix3c m2;
  bool orthogonality_ok;  // <M1,M1> = <M2,M2> = 9, all cross terms 0
};

const BasisSet3& basis3();

// Angle reduced into [0, 2pi).
double normalize_angle(double phi);

// Membership predicates.  in_w3 checks unit row/column sums within eps;
// is_bistochastic additionally requires entries >= -eps.
bool in_w3(const Matrix3& m, double eps = kDefaultEps);
bool is_bistochastic(const Matrix3& m, double eps = kDefaultEps);
bool is_symmetric_matrix(const Matrix3& m, double eps = kDefaultEps);

Matrix3 from_coords(const CoordUW& c);

/// Inverse of from_coords via the Frobenius closed form.  Throws
/// std::domain_error if m fails the in-W3 predicate.  Falls back to
/// to_coords_solve should the one-time basis check ever fail.
CoordUW to_coords(const Matrix3& m, double eps = kDefaultEps);

/// Inverse of from_coords as a 4-unknown real least-squares solve.  Kept as
/// an independent route for validating the closed form.
CoordUW to_coords_solve(const Matrix3& m, double eps = kDefaultEps);

/// The 2x2 arrangement [[u, conj(w)], [w, conj(u)]].
Rep2 rep2(const CoordUW& c);

/// Coordinate product law matching the 3x3 matrix product
/// from_coords(c1) * from_coords(c2).
CoordUW compose(const CoordUW& c1, const CoordUW& c2);

/// Eigenvalues of from_coords(c): always {1} plus the two eigenvalues of
/// rep2(c), i.e. the roots of x^2 - 2 Re(u) x + (|u|^2 - |w|^2).
std::array<Complex, 3> spectrum(const CoordUW& c);

/// Splits a symmetric coordinate into (phi, a, b).  Throws
/// std::domain_error when |Im u| > eps (matrix not symmetric).
HalfPlaneCoord half_plane_of(const CoordUW& c, double eps = kDefaultEps);

/// Inverse of half_plane_of: (a, b e^{i phi}).
CoordUW coord_of(const HalfPlaneCoord& h);

/// Piecewise secant boundary slope; range [1/2, 1], continuous across the
/// piece boundaries 2pi/3 and 4pi/3 (closed pieces, lower piece wins).
double boundary_f(double phi);

/// Vertices of the bistochastic triangle inside the half-plane phi:
/// { (-1/2, 0), (1, 0), (0, f(phi) e^{i phi}) }.
std::array<CoordUW, 3> bistochastic_extreme_points(double phi);

// Positive (semi)definiteness of the symmetric matrix at h.  The spectrum
// is {1, a+b, a-b}, so the strict test is a > b.
bool is_positive_definite(const HalfPlaneCoord& h, double eps = kDefaultEps);
bool is_positive_semidefinite(const HalfPlaneCoord& h, double eps = kDefaultEps);

}  // namespace birkhoff
