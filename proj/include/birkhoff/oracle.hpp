/*
 * oracle.hpp — brute-force verifiers kept independent of the classifier.
 *
 * Root search works on eigenvalue branches: matrices sharing a half-plane
 * commute and share eigenvectors, with 2x2-sector eigenvalues a +- b.  An
 * nth root must take each eigenvalue to a real nth root, so the candidate
 * set is finite and checked by powering the matrix back.  For w = 0 the
 * eigenvalue is doubly degenerate and symmetric roots may sit in any
 * half-plane; those are swept over a phi grid extended with the three
 * angles where f(phi) = 1.
 */

#pragma once

#include <vector>

#include "birkhoff/polytope3.hpp"

namespace birkhoff {

/// All symmetric bistochastic nth roots found among the real eigenvalue
/// branches of h.  Every returned root r satisfies
/// ||from_coords(r)^n - from_coords(h)||_inf < 1e-9.  An empty list means
/// no root exists among the enumerated branches.
std::vector<HalfPlaneCoord> nth_roots(const HalfPlaneCoord& h, int n,
                                      double eps = kDefaultEps);

/// Necessary-condition proxy for infinite divisibility: nth_roots nonempty
/// for every n <= n_max.
bool is_inf_divisible(const HalfPlaneCoord& h, int n_max = 12,
                      double eps = kDefaultEps);

/// True iff the generator L(theta, phi) = (2/3) Re[(-cos th) M1 +
/// sin th e^{i phi} M2] has all off-diagonal entries >= -tol.
bool generator_cone_check(double theta, double phi, double tol = 1e-12);

/// Largest tan(theta) passing generator_cone_check, found by bisection.
/// Reconstructs boundary_f independently of its closed form.
double f_numeric(double phi, double tol = 1e-7);

}  // namespace birkhoff
