#include "birkhoff/sweep.hpp"

#include <cmath>
#include <optional>

namespace birkhoff {

bool verdicts_consistent(MarkovClass verdict, double a, double b,
                         bool oracle_divisible, double eps) {
  const bool markov_or_div = verdict != MarkovClass::kNotMarkov;
  if (markov_or_div && !oracle_divisible) return false;
  if (!markov_or_div && a < b - eps && oracle_divisible) return false;
  return true;
}

std::vector<ClassifyRow> classification_sweep(const ClassifyGrid& grid,
                                              ExecMode mode) {
  const std::size_t total = static_cast<std::size_t>(grid.phi_samples) *
                            grid.a_samples * grid.b_samples;
  std::vector<std::optional<ClassifyRow>> slots(total);

  for_each_index(total, mode, [&](std::size_t idx) {
    const int k = static_cast<int>(idx % grid.b_samples);
    const int j = static_cast<int>((idx / grid.b_samples) % grid.a_samples);
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(grid.b_samples) * grid.a_samples));
    const double phi = kTwoPi * i / grid.phi_samples;
    const double f = boundary_f(phi);
    // Cover the triangle's bounding box; keep bistochastic points only.
    const double a = -0.5 + 1.5 * (j + 0.5) / grid.a_samples;
    const double b = f * (k + 0.5) / grid.b_samples;
    const HalfPlaneCoord h{phi, a, b, false};
    if (!is_bistochastic(from_coords(coord_of(h)), grid.eps)) return;
    ClassifyRow row;
    row.phi = phi;
    row.a = a;
    row.b = b;
    row.verdict = classify(h, grid.eps).markov_class;
    row.oracle_divisible = is_inf_divisible(h, grid.n_max, grid.eps);
    row.agree = verdicts_consistent(row.verdict, a, b, row.oracle_divisible, grid.eps);
    slots[idx] = row;
  });

  std::vector<ClassifyRow> rows;
  rows.reserve(total);
  for (const auto& s : slots) {
    if (s) rows.push_back(*s);
  }
  return rows;
}

std::vector<double> boundary_sweep(int samples, ExecMode mode, double tol) {
  std::vector<double> values(static_cast<std::size_t>(samples));
  for_each_index(values.size(), mode, [&](std::size_t i) {
    values[i] = f_numeric(kTwoPi * static_cast<double>(i) / samples, tol);
  });
  return values;
}

}  // namespace birkhoff
