/*
 * classifier.hpp — membership of symmetric bistochastic matrices in the
 * Markov-reachable set and the divisible set.
 *
 * For a half-plane point (phi, a, b) with a > b the deciding quantity is
 *
 *   tan th = (ln(a-b) - ln(a+b)) / (ln(a-b) + ln(a+b)),
 *
 * the angle of the unique symmetric semigroup through the point; the point
 * is Markov-reachable iff 0 <= tan th <= f(phi).  Points with a < b are
 * never reachable.  On the diagonal a = b only four points are reachable as
 * limits; the open segments a = b in (0, 1/2) at phi in {0, 2pi/3, 4pi/3}
 * are infinitely divisible without being Markov limits.
 */

#pragma once

#include <optional>
#include <string>

#include "birkhoff/polytope3.hpp"

namespace birkhoff {

enum class MarkovClass {
  kMarkovInterior,
  kMarkovLimitBoundary,
  kDivisibleNotMarkovLimit,
  kNotMarkov,
};

const char* to_string(MarkovClass c);

/// Verdict record for a symmetric coordinate.  theta is present exactly for
/// the two Markov classes.
struct Classification {
  bool in_b3sym = false;
  bool positive_semidefinite = false;
  MarkovClass markov_class = MarkovClass::kNotMarkov;
  std::optional<double> theta;
  double phi = 0.0;
  std::string notes;
};

/// tan(theta) of the symmetric semigroup through (a, b).  Requires a > b >= 0
/// and a point distinct from the identity; throws std::domain_error
/// otherwise (the identity belongs to every semigroup, points with a <= b to
/// none).  a + b may exceed 1: the identity is algebraic, not confined to
/// the bistochastic triangle.
double theta_of(double a, double b);

Classification classify(const HalfPlaneCoord& h, double eps = kDefaultEps);

}  // namespace birkhoff
