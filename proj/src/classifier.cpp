#include "birkhoff/classifier.hpp"

#include <cmath>
#include <stdexcept>

namespace birkhoff {

const char* to_string(MarkovClass c) {
  switch (c) {
    case MarkovClass::kMarkovInterior: return "MARKOV_INTERIOR";
    case MarkovClass::kMarkovLimitBoundary: return "MARKOV_LIMIT_BOUNDARY";
    case MarkovClass::kDivisibleNotMarkovLimit: return "DIVISIBLE_NOT_MARKOV_LIMIT";
    case MarkovClass::kNotMarkov: return "NOT_MARKOV";
  }
  return "UNKNOWN";
}

double theta_of(double a, double b) {
  if (b < 0.0) throw std::invalid_argument("theta_of: b must be nonnegative");
  if (!(a > b)) {
    throw std::domain_error(
        "theta_of: requires a > b; points with a <= b are never reached by a "
        "symmetric semigroup (the a = b limit cases are handled separately)");
  }
  const double lm = std::log(a - b);
  const double lp = std::log(a + b);
  const double den = lm + lp;
  if (std::abs(den) < 1e-14) {
    throw std::domain_error("theta_of: theta undefined, identity belongs to every semigroup");
  }
  return (lm - lp) / den;
}

namespace {

// Distance on the circle to the nearest of {0, 2pi/3, 4pi/3}.
double dist_to_special_phi(double phi) {
  double best = kTwoPi;
  for (double s : {0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0}) {
    double d = std::abs(normalize_angle(phi) - s);
    d = std::min(d, kTwoPi - d);
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

Classification classify(const HalfPlaneCoord& h, double eps) {
  if (h.b < 0.0) throw std::invalid_argument("classify: b must be nonnegative");
  Classification r;
  r.phi = normalize_angle(h.phi);
  const Matrix3 m = from_coords(coord_of(h));
  r.in_b3sym = is_bistochastic(m, eps);
  r.positive_semidefinite = is_positive_semidefinite(h, eps);
  const double f = boundary_f(r.phi);

  if (std::abs(h.a - h.b) <= eps) {
    // Diagonal a = b: the spectrum contains 0, so nothing here is a proper
    // exponential; only limits and the divisible segments remain.
    if (std::abs(h.a) <= eps) {
      r.markov_class = MarkovClass::kMarkovLimitBoundary;
      r.theta = 0.0;
      r.notes = "uniform matrix: infinite-time limit of the flat-decay semigroup";
    } else if (r.in_b3sym && std::abs(h.a - 0.5) <= eps &&
               dist_to_special_phi(r.phi) <= eps) {
      r.markov_class = MarkovClass::kMarkovLimitBoundary;
      r.theta = kPi / 4.0;
      r.notes = "idempotent W(1/2, 1/2 e^{i phi}): limit of the theta = pi/4 semigroup";
    } else if (r.in_b3sym && h.a > eps && h.a < 0.5 - eps &&
               dist_to_special_phi(r.phi) <= eps) {
      r.markov_class = MarkovClass::kDivisibleNotMarkovLimit;
      r.notes = "divisible segment: roots lie on the family with neutral element W(1/2, 1/2 e^{i phi})";
    } else {
      r.markov_class = MarkovClass::kNotMarkov;
      r.notes = "diagonal a = b outside the four limit points and the divisible segments";
    }
    return r;
  }

  if (h.a < h.b) {
    r.markov_class = MarkovClass::kNotMarkov;
    r.notes = "a < b: no symmetric semigroup reaches this point";
    return r;
  }

  // a > b
  if (!r.in_b3sym) {
    r.markov_class = MarkovClass::kNotMarkov;
    r.notes = "outside the bistochastic set";
    return r;
  }
  if (std::abs(h.a - 1.0) <= eps && h.b <= eps) {
    r.markov_class = MarkovClass::kMarkovInterior;
    r.theta = 0.0;
    r.notes = "identity: member of every semigroup; theta reported as 0 by convention";
    return r;
  }
  const double tan_theta = theta_of(h.a, h.b);
  if (std::abs(tan_theta - f) <= eps) {
    r.markov_class = MarkovClass::kMarkovLimitBoundary;
    r.theta = std::atan(tan_theta);
  } else if (tan_theta >= 0.0 && tan_theta < f) {
    r.markov_class = MarkovClass::kMarkovInterior;
    r.theta = std::atan(tan_theta);
  } else {
    r.markov_class = MarkovClass::kNotMarkov;
    r.notes = "tan theta exceeds f(phi): the through-going semigroup leaves the bistochastic set";
  }
  return r;
}

}  // namespace birkhoff
