#include "birkhoff/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace birkhoff {

bool DensityMatrix2::is_valid(double eps) const {
  return p1 >= -eps && p2 >= -eps && std::abs(p1 + p2 - 1.0) <= eps &&
         p1 * p2 - std::norm(c) >= -eps;
}

bool PauliChannel::is_valid(double eps) const {
  return ax >= -eps && ay >= -eps && az >= -eps && a0() >= -eps;
}

bool RateVector::is_cp_admissible(double eps) const {
  return vx >= -eps && vy >= -eps && vz >= -eps &&
         vx <= vy + vz + eps && vy <= vx + vz + eps && vz <= vx + vy + eps;
}

DensityMatrix2 apply_channel(const PauliChannel& ch, const DensityMatrix2& rho) {
  if (!ch.is_valid()) {
    throw std::domain_error("apply_channel: channel has negative coefficients");
  }
  // sigma_x rho sigma_x swaps populations and conjugates c; sigma_y adds a
  // sign to the coherence; sigma_z flips the coherence sign only.
  DensityMatrix2 out;
  const double diag_keep = ch.a0() + ch.az;
  const double diag_swap = ch.ax + ch.ay;
  out.p1 = diag_keep * rho.p1 + diag_swap * rho.p2;
  out.p2 = diag_swap * rho.p1 + diag_keep * rho.p2;
  out.c = (ch.a0() - ch.az) * rho.c + (ch.ax - ch.ay) * std::conj(rho.c);
  return out;
}

Eigen::Matrix2d to_classical(const PauliChannel& ch) {
  Eigen::Matrix2d b;
  const double keep = ch.a0() + ch.az;
  const double swap = ch.ax + ch.ay;
  b << keep, swap,
       swap, keep;
  return b;
}

double layer_lambda(const PauliChannel& ch) { return 1.0 - 2.0 * (ch.ax + ch.ay); }

PauliChannel markov_family(const RateVector& v, double t) {
  const double ex = std::exp(-v.vx * t);
  const double ey = std::exp(-v.vy * t);
  const double ez = std::exp(-v.vz * t);
  PauliChannel ch;
  ch.ax = 0.25 * (1.0 + ex - ey - ez);
  ch.ay = 0.25 * (1.0 - ex + ey - ez);
  ch.az = 0.25 * (1.0 - ex - ey + ez);
  return ch;
}

double consistency_residual(const RateVector& v, double t) {
  const PauliChannel ch = markov_family(v, t);
  return std::abs(ch.a0() + ch.az - 0.5 * (1.0 + std::exp(-v.vz * t)));
}

std::array<double, 3> transfer_eigenvalues(const PauliChannel& ch) {
  const double a0 = ch.a0();
  return {a0 + ch.ax - ch.ay - ch.az,
          a0 - ch.ax + ch.ay - ch.az,
          a0 - ch.ax - ch.ay + ch.az};
}

PauliChannel compose_channels(const PauliChannel& second, const PauliChannel& first) {
  const auto l1 = transfer_eigenvalues(first);
  const auto l2 = transfer_eigenvalues(second);
  const double lx = l1[0] * l2[0];
  const double ly = l1[1] * l2[1];
  const double lz = l1[2] * l2[2];
  PauliChannel ch;
  ch.ax = 0.25 * (1.0 + lx - ly - lz);
  ch.ay = 0.25 * (1.0 - lx + ly - lz);
  ch.az = 0.25 * (1.0 - lx - ly + lz);
  return ch;
}

}  // namespace birkhoff
