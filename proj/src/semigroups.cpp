#include "birkhoff/semigroups.hpp"

#include <cmath>
#include <stdexcept>

namespace birkhoff {

HalfPlaneCoord sym_point_halfplane(double theta, double phi, double t) {
  if (theta < 0.0 || theta > kPi) {
    throw std::domain_error("sym_point: theta must lie in [0, pi]");
  }
  if (t < 0.0) throw std::domain_error("sym_point: t must be nonnegative");
  const double decay = std::exp(-t * std::cos(theta));
  HalfPlaneCoord h;
  h.a = decay * std::cosh(t * std::sin(theta));
  h.b = decay * std::sinh(t * std::sin(theta));
  h.phi = normalize_angle(phi);
  h.any_phi = (h.b == 0.0);
  return h;
}

CoordUW sym_point(double theta, double phi, double t) {
  return coord_of(sym_point_halfplane(theta, phi, t));
}

namespace {

// C(s;t) = cosh(sqrt(s) t) and S(s;t) = sinh(sqrt(s) t)/sqrt(s), entire in
// s = |b|^2 - a^2.  Series near s = 0 avoids the 0/0 at |a| = |b|.
void cosh_sinh_entire(double s, double t, double& c, double& sc) {
  const double z = s * t * t;
  if (std::abs(z) < 1e-6) {
    c = 1.0 + z / 2.0 + z * z / 24.0 + z * z * z / 720.0;
    sc = t * (1.0 + z / 6.0 + z * z / 120.0 + z * z * z / 5040.0);
  } else if (s > 0.0) {
    const double d = std::sqrt(s);
    c = std::cosh(d * t);
    sc = std::sinh(d * t) / d;
  } else {
    const double g = std::sqrt(-s);
    c = std::cos(g * t);
    sc = std::sin(g * t) / g;
  }
}

}  // namespace

CoordUW general_point(const SemigroupSpec& spec, double t) {
  if (t < 0.0) throw std::domain_error("general_point: t must be nonnegative");
  const double s = std::norm(spec.b) - spec.a * spec.a;
  double c, sc;
  cosh_sinh_entire(s, t, c, sc);
  const double decay = std::exp(-t);
  return CoordUW{Complex(c, spec.a * sc) * decay, spec.b * (sc * decay)};
}

Generator3 generator(const SemigroupSpec& spec) {
  const BasisSet3& b = basis3();
  const Matrix3c z = Complex(-1.0, spec.a) * b.m1 + spec.b * b.m2;
  return (2.0 / 3.0) * z.real();
}

bool is_markov_generator(const Generator3& l, double eps) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(l.row(i).sum()) > 1e-12) return false;
    if (std::abs(l.col(i).sum()) > 1e-12) return false;
    for (int j = 0; j < 3; ++j) {
      if (i != j && l(i, j) < -eps) return false;
    }
  }
  return true;
}

Matrix3 expm(const Matrix3& l, double t) {
  if (!l.allFinite() || !std::isfinite(t)) {
    throw std::domain_error("expm: non-finite input");
  }
  Matrix3 a = t * l;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    a *= std::ldexp(1.0, -squarings);
  }
  Matrix3 result = Matrix3::Identity();
  Matrix3 term = Matrix3::Identity();
  for (int k = 1; k <= 40; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20 * result.cwiseAbs().maxCoeff()) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

CoordUW neutral_family_point(double phi, double t) {
  const double r = 0.5 * std::exp(-t);
  return CoordUW{Complex(r, 0.0), std::polar(r, phi)};
}

bool stays_bistochastic(const SemigroupSpec& spec, double t_max, int samples,
                        double eps) {
  if (samples < 1) throw std::domain_error("stays_bistochastic: samples < 1");
  for (int k = 0; k <= samples; ++k) {
    const double t = t_max * static_cast<double>(k) / samples;
    if (!is_bistochastic(from_coords(general_point(spec, t)), eps)) return false;
  }
  return true;
}

}  // namespace birkhoff
