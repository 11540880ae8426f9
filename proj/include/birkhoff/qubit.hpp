/*
 * qubit.hpp — Pauli channels and their classical 2x2 bistochastic shadows.
 *
 * A channel rho -> a0 rho + sum_g a_g sigma_g rho sigma_g acts on the
 * diagonal of rho through the symmetric bistochastic matrix
 * [[a0+az, ax+ay], [ax+ay, a0+az]]; the coherence never feeds back into the
 * populations, which foliates the channel tetrahedron into layers indexed
 * by lambda = 1 - 2(ax + ay).
 */

#pragma once

#include <array>

#include "birkhoff/polytope3.hpp"

namespace birkhoff {

/// Qubit density matrix [[p1, c], [conj(c), p2]].
struct DensityMatrix2 {
  double p1 = 1.0;
  double p2 = 0.0;
  Complex c{0.0, 0.0};

  bool is_valid(double eps = kDefaultEps) const;
};

/// Mixing coefficients of a Pauli channel; a0 = 1 - ax - ay - az.
struct PauliChannel {
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;

  double a0() const { return 1.0 - ax - ay - az; }
  bool is_valid(double eps = kDefaultEps) const;
};

/// Exponential decay rates of the channel's Pauli eigenvalues.  The family
/// below yields nonnegative mixing coefficients exactly when each rate is
/// at most the sum of the other two.
struct RateVector {
  double vx = 0.0;
  double vy = 0.0;
  double vz = 0.0;

  bool is_cp_admissible(double eps = kDefaultEps) const;
};

/// Applies the channel; throws std::domain_error on a channel with negative
/// coefficients.  The output diagonal depends only on the input diagonal.
DensityMatrix2 apply_channel(const PauliChannel& ch, const DensityMatrix2& rho);

/// Classical shadow [[a0+az, ax+ay], [ax+ay, a0+az]].
Eigen::Matrix2d to_classical(const PauliChannel& ch);

/// Foliation coordinate lambda = 1 - 2(ax + ay); to_classical(ch) equals
/// (1/2) [[1+lambda, 1-lambda], [1-lambda, 1+lambda]].
double layer_lambda(const PauliChannel& ch);

/// The Markov family a(v; t): coefficients whose Pauli eigenvalues are
/// (e^{-vx t}, e^{-vy t}, e^{-vz t}).  Pure affine evaluation; coefficient
/// nonnegativity holds for all t >= 0 iff v is cp-admissible.
PauliChannel markov_family(const RateVector& v, double t);

/// |a0(t) + az(t) - (1 + e^{-vz t})/2|; identically ~0 for the family.
double consistency_residual(const RateVector& v, double t);

/// Diagonal of the Pauli transfer matrix, (lx, ly, lz).
std::array<double, 3> transfer_eigenvalues(const PauliChannel& ch);

/// Channel composition (apply `first`, then `second`); Pauli eigenvalues
/// multiply componentwise.
PauliChannel compose_channels(const PauliChannel& second, const PauliChannel& first);

}  // namespace birkhoff
