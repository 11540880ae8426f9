// birkhoff — command-line surface over the coordinate, semigroup,
// classification, root, qubit and order-4 machinery, plus figure-data
// emission.  Exit codes: 0 success, 1 usage/parse error, 2 domain
// validation failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "birkhoff/classifier.hpp"
#include "birkhoff/figures.hpp"
#include "birkhoff/io.hpp"
#include "birkhoff/oracle.hpp"
#include "birkhoff/order4.hpp"
#include "birkhoff/qubit.hpp"
#include "birkhoff/semigroups.hpp"
#include "birkhoff/sweep.hpp"

namespace {

using namespace birkhoff;

struct CliError {
  int code;
  std::string message;
};

Json read_json(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw CliError{1, "cannot open input file: " + path};
    in = &file;
  }
  try {
    Json j;
    *in >> j;
    return j;
  } catch (const Json::parse_error& e) {
    throw CliError{1, std::string("malformed JSON: ") + e.what()};
  }
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{1, "cannot open output file: " + path};
  out << payload;
}

std::string dumps(const Json& j) { return j.dump(2) + "\n"; }

// Object results default to JSON, tables to CSV; --format flips either way.
void emit_object(const Json& j, const std::string& format, const std::string& output) {
  if (format == "csv") {
    write_output(output, json_to_kv_csv(j));
  } else {
    write_output(output, dumps(j));
  }
}

void emit_table(const std::string& csv, const std::string& format,
                const std::string& output) {
  if (format == "json") {
    write_output(output, dumps(csv_to_json(csv)));
  } else {
    write_output(output, csv);
  }
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
    return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw CliError{1, "cannot parse complex number '" + text + "' (want re or re,im)"};
  }
}

// ---------------------------------------------------------------------------
// coords

struct CoordsOpts {
  int order = 3;
  std::string matrix_path;
  std::string u, w, w2, w3, w4;
  std::optional<double> x;
  bool zero = false;
  double eps = kDefaultEps;
  std::string format;
  std::string output;
};

void run_coords(const CoordsOpts& o) {
  if (o.order == 3) {
    if (!o.matrix_path.empty()) {
      const Matrix3 m = matrix3_from_json(read_json(o.matrix_path));
      emit_object(coord_to_json(to_coords(m, o.eps)), o.format, o.output);
      return;
    }
    CoordUW c;
    if (!o.zero) {
      if (o.u.empty() && o.w.empty()) {
        throw CliError{1, "coords: provide --matrix, --zero, or --u/--w"};
      }
      if (!o.u.empty()) c.u = parse_complex(o.u);
      if (!o.w.empty()) c.w = parse_complex(o.w);
    }
    emit_object(matrix_to_json(from_coords(c)), o.format, o.output);
    return;
  }
  if (o.order != 4) throw CliError{1, "coords: --order must be 3 or 4"};
  if (!o.matrix_path.empty()) {
    const Matrix4 m = matrix4_from_json(read_json(o.matrix_path));
    emit_object(coord4_to_json(to_coords4(m, o.eps)), o.format, o.output);
    return;
  }
  Coord4 c;
  if (!o.zero) {
    if (o.u.empty() && o.w2.empty() && o.w3.empty() && o.w4.empty() && !o.x) {
      throw CliError{1, "coords: provide --matrix, --zero, or coordinate flags"};
    }
    if (!o.u.empty()) c.u = parse_complex(o.u);
    if (!o.w2.empty()) c.w2 = parse_complex(o.w2);
    if (!o.w3.empty()) c.w3 = parse_complex(o.w3);
    if (!o.w4.empty()) c.w4 = parse_complex(o.w4);
    if (o.x) c.x = *o.x;
  }
  emit_object(matrix_to_json(from_coords4(c)), o.format, o.output);
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOpts {
  std::optional<double> phi, a, b;
  std::string matrix_path;
  double eps = kDefaultEps;
  bool verify = false;
  bool grid = false;
  int phi_samples = 25;
  int a_samples = 20;
  int b_samples = 20;
  int n_max = 12;
  bool serial = false;
  std::string format;
  std::string output;
};

HalfPlaneCoord classify_input(const ClassifyOpts& o) {
  if (!o.matrix_path.empty()) {
    const Matrix3 m = matrix3_from_json(read_json(o.matrix_path));
    return half_plane_of(to_coords(m, o.eps), o.eps);
  }
  if (!o.phi || !o.a || !o.b) {
    throw CliError{1, "classify: provide --matrix or all of --phi/--a/--b"};
  }
  if (*o.b < 0.0) throw CliError{2, "classify: b must be nonnegative"};
  return HalfPlaneCoord{*o.phi, *o.a, *o.b, false};
}

void run_classify(const ClassifyOpts& o) {
  if (o.grid) {
    ClassifyGrid grid;
    grid.phi_samples = o.phi_samples;
    grid.a_samples = o.a_samples;
    grid.b_samples = o.b_samples;
    grid.eps = o.eps;
    grid.n_max = o.n_max;
    const auto rows = classification_sweep(
        grid, o.serial ? ExecMode::kSerial : ExecMode::kParallel);
    emit_table(classify_sweep_csv(rows), o.format, o.output);
    return;
  }
  const HalfPlaneCoord h = classify_input(o);
  const Classification c = classify(h, o.eps);
  Json j = classification_to_json(c);
  if (o.verify) {
    const bool divisible = is_inf_divisible(h, o.n_max, o.eps);
    j["oracle_divisible"] = divisible;
    j["oracle_n_max"] = o.n_max;
    j["agree"] = verdicts_consistent(c.markov_class, h.a, h.b, divisible, o.eps);
  }
  emit_object(j, o.format, o.output);
}

// ---------------------------------------------------------------------------
// semigroup

struct SemigroupOpts {
  std::optional<double> a, b_re, b_im, theta, phi;
  double t_max = 5.0;
  int steps = 100;
  std::optional<double> check_horizon;
  bool print_generator = false;
  double eps = kDefaultEps;
  std::string format;
  std::string output;
};

SemigroupSpec semigroup_spec(const SemigroupOpts& o) {
  if (o.theta) {
    // Symmetric family named by (theta, phi); unit decay-rate time scale.
    const double theta = *o.theta;
    if (theta < 0.0 || theta >= kPi / 2.0) {
      throw CliError{2, "semigroup: --theta must lie in [0, pi/2) for the (a, b) form"};
    }
    return SemigroupSpec{0.0, std::polar(std::tan(theta), o.phi.value_or(0.0))};
  }
  SemigroupSpec spec;
  spec.a = o.a.value_or(0.0);
  spec.b = Complex(o.b_re.value_or(0.0), o.b_im.value_or(0.0));
  return spec;
}

void run_semigroup(const SemigroupOpts& o) {
  const SemigroupSpec spec = semigroup_spec(o);
  if (o.print_generator) {
    emit_object(matrix_to_json(generator(spec)), o.format, o.output);
    return;
  }
  if (o.check_horizon) {
    Json j{{"a", spec.a},
           {"b", Json::array({spec.b.real(), spec.b.imag()})},
           {"t_max", *o.check_horizon},
           {"stays_bistochastic",
            stays_bistochastic(spec, *o.check_horizon, 400, o.eps)}};
    emit_object(j, o.format, o.output);
    return;
  }
  emit_table(trajectory_csv(spec, o.t_max, o.steps), o.format, o.output);
}

// ---------------------------------------------------------------------------
// boundary / roots / pauli / order4 / figure

struct BoundaryOpts {
  int samples = 720;
  bool compare = false;
  double eps = kDefaultEps;
  std::string format;
  std::string output;
};

void run_boundary(const BoundaryOpts& o) {
  emit_table(figure_boundary_csv(o.samples, o.compare), o.format, o.output);
}

struct RootsOpts {
  double phi = 0.0, a = 0.0, b = 0.0;
  int n = 2;
  std::optional<int> n_max;
  double eps = kDefaultEps;
  std::string format;
  std::string output;
};

void run_roots(const RootsOpts& o) {
  if (o.b < 0.0) throw CliError{2, "roots: b must be nonnegative"};
  const HalfPlaneCoord h{o.phi, o.a, o.b, o.b == 0.0};
  if (!is_bistochastic(from_coords(coord_of(h)), o.eps)) {
    throw CliError{2, "roots: input point is not bistochastic"};
  }
  if (o.n_max) {
    Json j{{"divisible", is_inf_divisible(h, *o.n_max, o.eps)}, {"n_max", *o.n_max}};
    emit_object(j, o.format, o.output);
    return;
  }
  Json roots = Json::array();
  for (const HalfPlaneCoord& r : nth_roots(h, o.n, o.eps)) {
    roots.push_back(Json{{"phi", r.phi}, {"a", r.a}, {"b", r.b}});
  }
  emit_object(Json{{"n", o.n}, {"count", roots.size()}, {"roots", roots}}, o.format,
              o.output);
}

struct PauliOpts {
  std::optional<double> ax, ay, az;
  std::optional<double> vx, vy, vz;
  double t = 1.0;
  std::string rho_path;
  double eps = kDefaultEps;
  std::string format;
  std::string output;
};

void run_pauli(const PauliOpts& o) {
  PauliChannel ch;
  Json j;
  if (o.vx || o.vy || o.vz) {
    const RateVector v{o.vx.value_or(0.0), o.vy.value_or(0.0), o.vz.value_or(0.0)};
    ch = markov_family(v, o.t);
    j["t"] = o.t;
    j["consistency_residual"] = consistency_residual(v, o.t);
    j["cp_admissible_rates"] = v.is_cp_admissible();
  } else if (o.ax || o.ay || o.az) {
    ch = PauliChannel{o.ax.value_or(0.0), o.ay.value_or(0.0), o.az.value_or(0.0)};
  } else {
    throw CliError{1, "pauli: provide --ax/--ay/--az or --vx/--vy/--vz"};
  }
  if (!ch.is_valid(o.eps)) throw CliError{2, "pauli: channel coefficients are not a valid mixture"};
  j["channel"] = channel_to_json(ch);
  j["a0"] = ch.a0();
  j["lambda"] = layer_lambda(ch);
  const Eigen::Matrix2d b = to_classical(ch);
  j["classical"] = Json::array({Json::array({b(0, 0), b(0, 1)}),
                                Json::array({b(1, 0), b(1, 1)})});
  if (!o.rho_path.empty()) {
    const DensityMatrix2 rho = state_from_json(read_json(o.rho_path));
    if (!rho.is_valid(o.eps)) throw CliError{2, "pauli: input state is not a density matrix"};
    j["output_state"] = state_to_json(apply_channel(ch, rho));
  }
  emit_object(j, o.format, o.output);
}

struct Order4Opts {
  std::string matrix_path;
  std::string u, w2, w3, w4;
  std::optional<double> x;
  bool zero = false;
  bool show_rep3 = false;
  bool check_rep3 = false;
  int pairs = 1000;
  unsigned seed = 20240811u;
  double eps = kDefaultEps;
  std::string format;
  std::string output;
};

void run_order4(const Order4Opts& o) {
  if (o.check_rep3) {
    const double residual = rep3_multiplicativity_residual(o.pairs, o.seed);
    Json j{{"pairs", o.pairs},
           {"max_residual", residual},
           {"multiplicative_within_1e-10", residual < 1e-10}};
    emit_object(j, o.format, o.output);
    return;
  }
  Coord4 c;
  if (!o.matrix_path.empty()) {
    c = to_coords4(matrix4_from_json(read_json(o.matrix_path)), o.eps);
    if (!o.show_rep3) {
      emit_object(coord4_to_json(c), o.format, o.output);
      return;
    }
  } else if (!o.zero) {
    if (!o.u.empty()) c.u = parse_complex(o.u);
    if (!o.w2.empty()) c.w2 = parse_complex(o.w2);
    if (!o.w3.empty()) c.w3 = parse_complex(o.w3);
    if (!o.w4.empty()) c.w4 = parse_complex(o.w4);
    if (o.x) c.x = *o.x;
  }
  if (o.show_rep3) {
    const Eigen::Matrix3cd r = rep3(c);
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
      Json row = Json::array();
      for (int k = 0; k < 3; ++k) {
        row.push_back(Json::array({r(i, k).real(), r(i, k).imag()}));
      }
      rows.push_back(row);
    }
    emit_object(Json{{"rep3", rows}}, o.format, o.output);
    return;
  }
  emit_object(matrix_to_json(from_coords4(c)), o.format, o.output);
}

struct FigureOpts {
  std::string which;
  double phi = 0.0;
  int samples = 720;
  double a = 0.0, b_re = 0.0, b_im = 0.0;
  double vx = 0.0, vy = 0.0, vz = 0.0;
  double t_max = 5.0;
  int steps = 100;
  double eps = kDefaultEps;
  std::string format;
  std::string output;
};

void run_figure(const FigureOpts& o) {
  std::string payload;
  if (o.which == "polytope3") {
    payload = figure_polytope3_csv();
  } else if (o.which == "bipyramid") {
    payload = figure_bipyramid_csv();
  } else if (o.which == "halfplane") {
    payload = figure_halfplane_csv(o.phi);
  } else if (o.which == "boundary") {
    payload = figure_boundary_csv(o.samples);
  } else if (o.which == "semigroup") {
    payload = figure_semigroup_csv({o.a, Complex(o.b_re, o.b_im)}, o.t_max, o.steps);
  } else if (o.which == "pauli") {
    payload = figure_pauli_csv({o.vx, o.vy, o.vz}, o.t_max, o.steps);
  } else {
    throw CliError{1, "figure: unknown selector '" + o.which +
                          "' (want polytope3|bipyramid|halfplane|boundary|semigroup|pauli)"};
  }
  emit_table(payload, o.format, o.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex coordinates, Markov semigroups and divisibility "
               "classification for bistochastic matrices of orders 3 and 4"};
  app.require_subcommand(1);

  CoordsOpts coords;
  CLI::App* coords_cmd = app.add_subcommand(
      "coords", "Convert between matrices and complex coordinates");
  coords_cmd->add_option("--order", coords.order, "Matrix order (3 or 4)");
  coords_cmd->add_option("--matrix", coords.matrix_path, "Matrix JSON file ('-' for stdin)");
  coords_cmd->add_option("--u", coords.u, "u as re or re,im");
  coords_cmd->add_option("--w", coords.w, "w as re or re,im (order 3)");
  coords_cmd->add_option("--w2", coords.w2, "w2 (order 4)");
  coords_cmd->add_option("--w3", coords.w3, "w3 (order 4)");
  coords_cmd->add_option("--w4", coords.w4, "w4 (order 4)");
  coords_cmd->add_option("--x", coords.x, "x (order 4)");
  coords_cmd->add_flag("--zero", coords.zero, "Use the all-zero coordinate");
  coords_cmd->add_option("--eps", coords.eps, "Membership tolerance");
  coords_cmd->add_option("--format", coords.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  coords_cmd->add_option("--output", coords.output, "Output path (default stdout)");

  ClassifyOpts cls;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Markov/divisibility classification of a symmetric point");
  classify_cmd->add_option("--phi", cls.phi, "Half-plane angle");
  classify_cmd->add_option("--a", cls.a, "u coordinate (real)");
  classify_cmd->add_option("--b", cls.b, "|w| coordinate");
  classify_cmd->add_option("--matrix", cls.matrix_path, "Matrix JSON file");
  classify_cmd->add_option("--eps", cls.eps, "Tolerance");
  classify_cmd->add_flag("--verify", cls.verify, "Also run the divisibility oracle");
  classify_cmd->add_flag("--grid", cls.grid, "Sweep a (phi, a, b) grid to CSV");
  classify_cmd->add_option("--phi-samples", cls.phi_samples, "Grid angles");
  classify_cmd->add_option("--a-samples", cls.a_samples, "Grid a steps");
  classify_cmd->add_option("--b-samples", cls.b_samples, "Grid b steps");
  classify_cmd->add_option("--n-max", cls.n_max, "Oracle root-order cutoff");
  classify_cmd->add_flag("--serial", cls.serial, "Run the grid single-threaded");
  classify_cmd->add_option("--format", cls.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  classify_cmd->add_option("--output", cls.output, "Output path");

  SemigroupOpts sg;
  CLI::App* semigroup_cmd = app.add_subcommand(
      "semigroup", "Trajectories, generators and bistochasticity checks");
  semigroup_cmd->add_option("--a", sg.a, "Rotation parameter a");
  semigroup_cmd->add_option("--b-re", sg.b_re, "Re b");
  semigroup_cmd->add_option("--b-im", sg.b_im, "Im b");
  semigroup_cmd->add_option("--theta", sg.theta, "Symmetric family angle");
  semigroup_cmd->add_option("--phi", sg.phi, "Half-plane for --theta");
  semigroup_cmd->add_option("--t-max", sg.t_max, "Trajectory horizon");
  semigroup_cmd->add_option("--steps", sg.steps, "Trajectory steps");
  semigroup_cmd->add_option("--check-bistochastic", sg.check_horizon,
                            "Report whether the trajectory stays bistochastic up to T");
  semigroup_cmd->add_flag("--generator", sg.print_generator, "Print the generator matrix");
  semigroup_cmd->add_option("--eps", sg.eps, "Tolerance");
  semigroup_cmd->add_option("--format", sg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  semigroup_cmd->add_option("--output", sg.output, "Output path");

  BoundaryOpts bd;
  CLI::App* boundary_cmd = app.add_subcommand("boundary", "Tabulate f(phi)");
  boundary_cmd->add_option("--samples", bd.samples, "Number of angles");
  boundary_cmd->add_flag("--compare", bd.compare, "Add the cone-reconstructed column");
  boundary_cmd->add_option("--eps", bd.eps, "Tolerance");
  boundary_cmd->add_option("--format", bd.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  boundary_cmd->add_option("--output", bd.output, "Output path");

  RootsOpts rt;
  CLI::App* roots_cmd = app.add_subcommand("roots", "Enumerate symmetric nth roots");
  roots_cmd->add_option("--phi", rt.phi, "Half-plane angle");
  roots_cmd->add_option("--a", rt.a, "u coordinate (real)")->required();
  roots_cmd->add_option("--b", rt.b, "|w| coordinate");
  roots_cmd->add_option("--n", rt.n, "Root order");
  roots_cmd->add_option("--n-max", rt.n_max, "Divisibility check up to n_max");
  roots_cmd->add_option("--eps", rt.eps, "Tolerance");
  roots_cmd->add_option("--format", rt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  roots_cmd->add_option("--output", rt.output, "Output path");

  PauliOpts pl;
  CLI::App* pauli_cmd = app.add_subcommand("pauli", "Pauli channels and their classical shadows");
  pauli_cmd->add_option("--ax", pl.ax, "sigma_x weight");
  pauli_cmd->add_option("--ay", pl.ay, "sigma_y weight");
  pauli_cmd->add_option("--az", pl.az, "sigma_z weight");
  pauli_cmd->add_option("--vx", pl.vx, "x decay rate (Markov family)");
  pauli_cmd->add_option("--vy", pl.vy, "y decay rate");
  pauli_cmd->add_option("--vz", pl.vz, "z decay rate");
  pauli_cmd->add_option("--t", pl.t, "Family time");
  pauli_cmd->add_option("--rho", pl.rho_path, "State JSON to push through the channel");
  pauli_cmd->add_option("--eps", pl.eps, "Validity tolerance");
  pauli_cmd->add_option("--format", pl.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  pauli_cmd->add_option("--output", pl.output, "Output path");

  Order4Opts o4;
  CLI::App* order4_cmd = app.add_subcommand("order4", "Order-4 coordinates and the 3x3 arrangement");
  order4_cmd->add_option("--matrix", o4.matrix_path, "Matrix JSON file");
  order4_cmd->add_option("--u", o4.u, "u as re or re,im");
  order4_cmd->add_option("--w2", o4.w2, "w2");
  order4_cmd->add_option("--w3", o4.w3, "w3");
  order4_cmd->add_option("--w4", o4.w4, "w4");
  order4_cmd->add_option("--x", o4.x, "x");
  order4_cmd->add_flag("--zero", o4.zero, "All-zero coordinate");
  order4_cmd->add_flag("--rep3", o4.show_rep3, "Print the 3x3 arrangement");
  order4_cmd->add_flag("--check-rep3", o4.check_rep3, "Report the multiplicativity residual");
  order4_cmd->add_option("--pairs", o4.pairs, "Pairs for --check-rep3");
  order4_cmd->add_option("--seed", o4.seed, "Seed for --check-rep3");
  order4_cmd->add_option("--eps", o4.eps, "Tolerance");
  order4_cmd->add_option("--format", o4.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  order4_cmd->add_option("--output", o4.output, "Output path");

  FigureOpts fg;
  CLI::App* figure_cmd = app.add_subcommand("figure", "Emit figure data as CSV");
  figure_cmd->add_option("--which", fg.which, "polytope3|bipyramid|halfplane|boundary|semigroup|pauli")
      ->required();
  figure_cmd->add_option("--phi", fg.phi, "Half-plane angle (halfplane)");
  figure_cmd->add_option("--samples", fg.samples, "Angle samples (boundary)");
  figure_cmd->add_option("--a", fg.a, "Semigroup a");
  figure_cmd->add_option("--b-re", fg.b_re, "Semigroup Re b");
  figure_cmd->add_option("--b-im", fg.b_im, "Semigroup Im b");
  figure_cmd->add_option("--vx", fg.vx, "Pauli x rate");
  figure_cmd->add_option("--vy", fg.vy, "Pauli y rate");
  figure_cmd->add_option("--vz", fg.vz, "Pauli z rate");
  figure_cmd->add_option("--t-max", fg.t_max, "Trajectory horizon");
  figure_cmd->add_option("--steps", fg.steps, "Trajectory steps");
  figure_cmd->add_option("--eps", fg.eps, "Tolerance");
  figure_cmd->add_option("--format", fg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  figure_cmd->add_option("--output", fg.output, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (coords_cmd->parsed()) run_coords(coords);
    if (classify_cmd->parsed()) run_classify(cls);
    if (semigroup_cmd->parsed()) run_semigroup(sg);
    if (boundary_cmd->parsed()) run_boundary(bd);
    if (roots_cmd->parsed()) run_roots(rt);
    if (pauli_cmd->parsed()) run_pauli(pl);
    if (order4_cmd->parsed()) run_order4(o4);
    if (figure_cmd->parsed()) run_figure(fg);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
