/*
 * semigroups.hpp — closed-form one-parameter semigroups inside W3.
 *
 * A semigroup is named by (a real, b complex); its trajectory is
 *
 *   (u, w)(t) = e^{-t} * exp(t K)  read through the 2x2 picture,
 *   K = [[ia, conj(b)], [b, -ia]],  K^2 = (|b|^2 - a^2) I,
 *
 * which splits into a hyperbolic branch (|b| > |a|), a trigonometric branch
 * (|a| > |b|) and pure decay (a = b = 0).  Both branches are evaluated
 * through the entire functions C(s;t) = cosh(sqrt(s) t) and
 * S(s;t) = sinh(sqrt(s) t)/sqrt(s) of s = |b|^2 - a^2, so the |a| = |b|
 * boundary needs no special casing beyond a short series.
 *
 * The symmetric family uses the unit-speed angle parametrization
 * u = e^{-t cos th} cosh(t sin th); the two time scales are related by
 * t_general = t_sym * cos th with b = tan th e^{i phi}.
 */

#pragma once

#include "birkhoff/polytope3.hpp"

namespace birkhoff {

/// Parameters naming a one-parameter semigroup in W3.
struct SemigroupSpec {
  double a = 0.0;
  Complex b{0.0, 0.0};
};

/// 3x3 generator; rows and columns sum to zero.
using Generator3 = Matrix3;

/// Symmetric-family point: u = e^{-t cos th} cosh(t sin th),
/// w = e^{-t cos th} sinh(t sin th) e^{i phi}.  Requires theta in [0, pi],
/// t >= 0.
CoordUW sym_point(double theta, double phi, double t);

/// Same point in half-plane form.  a and b depend on (theta, t) only, so
/// they are bitwise independent of phi.
HalfPlaneCoord sym_point_halfplane(double theta, double phi, double t);

/// General-family point for parameters (a, b) at time t >= 0.
CoordUW general_point(const SemigroupSpec& spec, double t);

/// Tangent generator of the family at the identity:
/// L = (2/3) Re[(-1 + ia) M1 + b M2].
Generator3 generator(const SemigroupSpec& spec);

/// Markov-generating test: zero row/column sums with nonnegative
/// off-diagonal entries (within eps).
bool is_markov_generator(const Generator3& l, double eps = 1e-12);

/// Reference matrix exponential exp(t * l) by scaling and squaring with a
/// Taylor core.  Squaring depth is chosen from the scaled norm; accurate to
/// ~1e-12 relative for ||t l|| <= 50.  Throws on non-finite input.
Matrix3 expm(const Matrix3& l, double t);

/// Member of the family with non-identity neutral element W(1/2, 1/2 e^{i phi}):
/// (u, w)(t) = (e^{-t}/2, e^{-t}/2 e^{i phi}).
CoordUW neutral_family_point(double phi, double t);

/// Numerical check that the trajectory of `spec` stays bistochastic on a
/// uniform time grid over [0, t_max].
bool stays_bistochastic(const SemigroupSpec& spec, double t_max,
                        int samples = 200, double eps = kDefaultEps);

}  // namespace birkhoff
