/*
 * io.hpp — wire formats.
 *
 * Matrices travel as {"rows": [[...], ...]}, coordinates as
 * {"u": [re, im], "w": [re, im]} (order 4 adds w2..w4 and the real x).
 * CSV uses comma separation, '.' decimal point, LF line endings and a
 * mandatory header row.  Numbers are printed in the shortest form that
 * parses back to the same double, so identical inputs give byte-identical
 * output on any platform.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "birkhoff/classifier.hpp"
#include "birkhoff/order4.hpp"
#include "birkhoff/qubit.hpp"
#include "birkhoff/semigroups.hpp"
#include "birkhoff/sweep.hpp"

namespace birkhoff {

using Json = nlohmann::json;

/// Input text that parses as JSON but does not match the wire format.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal representation.
std::string format_double(double x);

Json matrix_to_json(const Matrix3& m);
Json matrix_to_json(const Matrix4& m);
Matrix3 matrix3_from_json(const Json& j);
Matrix4 matrix4_from_json(const Json& j);

Json coord_to_json(const CoordUW& c);
CoordUW coord_from_json(const Json& j);

Json coord4_to_json(const Coord4& c);
Coord4 coord4_from_json(const Json& j);

Json classification_to_json(const Classification& c);

Json channel_to_json(const PauliChannel& ch);
PauliChannel channel_from_json(const Json& j);
Json state_to_json(const DensityMatrix2& rho);
DensityMatrix2 state_from_json(const Json& j);

/// One CSV line from formatted cells, LF-terminated.  Cells containing a
/// comma, quote or newline are quoted.
std::string csv_line(const std::vector<std::string>& cells);

/// Object rendered as a key,value table, nested keys joined with dots.
std::string json_to_kv_csv(const Json& j);

/// CSV table rendered as a JSON array of row objects; numeric-looking
/// cells become numbers.
Json csv_to_json(const std::string& csv);

std::string trajectory_csv(const SemigroupSpec& spec, double t_max, int steps);
std::string classify_sweep_csv(const std::vector<ClassifyRow>& rows);

}  // namespace birkhoff
