#include "birkhoff/figures.hpp"

#include <stdexcept>

#include "birkhoff/io.hpp"
#include "birkhoff/oracle.hpp"

namespace birkhoff {

namespace {

struct NamedCoord {
  const char* label;
  CoordUW c;
};

std::vector<NamedCoord> permutation_vertices() {
  const Complex o = basis3().omega;
  return {{"P_e", {Complex(1.0, 0.0), {}}},
          {"P_12", {{}, Complex(1.0, 0.0)}},
          {"P_123", {o * o, {}}},
          {"P_13", {{}, o * o}},
          {"P_132", {o, {}}},
          {"P_23", {{}, o}}};
}

}  // namespace

std::string figure_polytope3_csv() {
  std::string out = "label,re_u,im_u,re_w,im_w\n";
  for (const NamedCoord& v : permutation_vertices()) {
    out += csv_line({v.label, format_double(v.c.u.real()), format_double(v.c.u.imag()),
                     format_double(v.c.w.real()), format_double(v.c.w.imag())});
  }
  return out;
}

std::string figure_bipyramid_csv() {
  // Symmetric vertices: four permutation matrices plus the midpoint of the
  // two 3-cycles, which projects to (-1/2, 0).
  std::string out = "label,a,re_w,im_w\n";
  const Complex o = basis3().omega;
  const struct {
    const char* label;
    double a;
    Complex w;
  } rows[] = {
      {"P_e", 1.0, {}},
      {"P_12", 0.0, Complex(1.0, 0.0)},
      {"P_13", 0.0, o * o},
      {"P_23", 0.0, o},
      {"cycle_midpoint", -0.5, {}},
  };
  for (const auto& r : rows) {
    out += csv_line({r.label, format_double(r.a), format_double(r.w.real()),
                     format_double(r.w.imag())});
  }
  return out;
}

std::string figure_halfplane_csv(double phi) {
  const double p = normalize_angle(phi);
  const double f = boundary_f(p);
  std::string out = "region,idx,a,b\n";
  const auto emit = [&](const char* region, int idx, double a, double b) {
    out += csv_line({region, std::to_string(idx), format_double(a), format_double(b)});
  };
  // Closed triangle outline (a, b) with b = |w|.
  const double tri[4][2] = {{-0.5, 0.0}, {1.0, 0.0}, {0.0, f}, {-0.5, 0.0}};
  for (int i = 0; i < 4; ++i) emit("bistochastic_triangle", i, tri[i][0], tri[i][1]);
  // Positive-definite wedge boundary a = b, clipped to the triangle edge
  // a + b/f = 1, plus the base ray b = 0.
  const double cut = f / (1.0 + f);
  emit("positive_definite_edge", 0, 0.0, 0.0);
  emit("positive_definite_edge", 1, cut, cut);
  emit("positive_definite_base", 0, 0.0, 0.0);
  emit("positive_definite_base", 1, 1.0, 0.0);
  return out;
}

std::string figure_boundary_csv(int samples, bool with_numeric) {
  if (samples < 1) throw std::domain_error("figure_boundary_csv: samples must be positive");
  std::string out = with_numeric ? "phi,f,f_numeric\n" : "phi,f\n";
  for (int i = 0; i < samples; ++i) {
    const double phi = kTwoPi * static_cast<double>(i) / samples;
    std::vector<std::string> cells = {format_double(phi), format_double(boundary_f(phi))};
    if (with_numeric) cells.push_back(format_double(f_numeric(phi)));
    out += csv_line(cells);
  }
  return out;
}

std::string figure_semigroup_csv(const SemigroupSpec& spec, double t_max, int steps) {
  return trajectory_csv(spec, t_max, steps);
}

std::string figure_pauli_csv(const RateVector& v, double t_max, int steps) {
  if (steps < 1) throw std::domain_error("figure_pauli_csv: steps must be positive");
  std::string out = "t,ax,ay,az,a0,lambda\n";
  for (int k = 0; k <= steps; ++k) {
    const double t = t_max * static_cast<double>(k) / steps;
    const PauliChannel ch = markov_family(v, t);
    out += csv_line({format_double(t), format_double(ch.ax), format_double(ch.ay),
                     format_double(ch.az), format_double(ch.a0()),
                     format_double(layer_lambda(ch))});
  }
  return out;
}

}  // namespace birkhoff
