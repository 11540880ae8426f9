/*
 * figures.hpp — CSV data behind the plots: polytope vertices, half-plane
 * region outlines, the boundary slope table and trajectories.
 */

#pragma once

#include <string>

#include "birkhoff/qubit.hpp"
#include "birkhoff/semigroups.hpp"

namespace birkhoff {

/// The six permutation vertices with their complex coordinates.
std::string figure_polytope3_csv();

/// Vertices of the bipyramid of symmetric bistochastic matrices in
/// (a, Re w, Im w) space.
std::string figure_bipyramid_csv();

/// Region outlines inside the half-plane phi: the bistochastic triangle and
/// the positive-definite wedge boundary, as labeled polylines.
std::string figure_halfplane_csv(double phi);

/// phi, f(phi) over `samples` equispaced angles; optionally adds the
/// numerically reconstructed column.
std::string figure_boundary_csv(int samples, bool with_numeric = false);

/// Trajectory of the (a, b) semigroup: t, re_u, im_u, re_w, im_w.
std::string figure_semigroup_csv(const SemigroupSpec& spec, double t_max, int steps);

/// Markov family of Pauli channels: t, ax, ay, az, a0, lambda.
std::string figure_pauli_csv(const RateVector& v, double t_max, int steps);

}  // namespace birkhoff
