#include "birkhoff/io.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "birkhoff/semigroups.hpp"

namespace birkhoff {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j.at(0).is_number() || !j.at(1).is_number()) {
    throw FormatError("expected complex number as [re, im]");
  }
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

template <typename M>
Json rows_json(const M& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return Json{{"rows", rows}};
}

template <typename M>
M rows_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("rows")) {
    throw FormatError("matrix: expected an object with a \"rows\" array");
  }
  const Json& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw FormatError("matrix: expected " + std::to_string(n) + " rows");
  }
  M m;
  for (int i = 0; i < n; ++i) {
    const Json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw FormatError("matrix: expected " + std::to_string(n) + " entries per row");
    }
    for (int k = 0; k < n; ++k) {
      if (!row.at(k).is_number()) {
        throw FormatError("matrix: entries must be numbers");
      }
      m(i, k) = row.at(k).get<double>();
    }
  }
  return m;
}

}  // namespace

Json matrix_to_json(const Matrix3& m) { return rows_json(m); }
Json matrix_to_json(const Matrix4& m) { return rows_json(m); }
Matrix3 matrix3_from_json(const Json& j) { return rows_from_json<Matrix3>(j, 3); }
Matrix4 matrix4_from_json(const Json& j) { return rows_from_json<Matrix4>(j, 4); }

Json coord_to_json(const CoordUW& c) {
  return Json{{"u", complex_to_json(c.u)}, {"w", complex_to_json(c.w)}};
}

CoordUW coord_from_json(const Json& j) {
  return CoordUW{complex_from_json(j.at("u")), complex_from_json(j.at("w"))};
}

Json coord4_to_json(const Coord4& c) {
  return Json{{"u", complex_to_json(c.u)},
              {"w2", complex_to_json(c.w2)},
              {"w3", complex_to_json(c.w3)},
              {"w4", complex_to_json(c.w4)},
              {"x", c.x}};
}

Coord4 coord4_from_json(const Json& j) {
  Coord4 c;
  c.u = complex_from_json(j.at("u"));
  c.w2 = complex_from_json(j.at("w2"));
  c.w3 = complex_from_json(j.at("w3"));
  c.w4 = complex_from_json(j.at("w4"));
  c.x = j.at("x").get<double>();
  return c;
}

Json classification_to_json(const Classification& c) {
  Json j{{"in_B3sym", c.in_b3sym},
         {"positive_semidefinite", c.positive_semidefinite},
         {"markov_class", to_string(c.markov_class)},
         {"phi", c.phi},
         {"notes", c.notes}};
  if (c.theta) {
    j["theta"] = *c.theta;
  } else {
    j["theta"] = nullptr;
  }
  return j;
}

Json channel_to_json(const PauliChannel& ch) {
  return Json{{"ax", ch.ax}, {"ay", ch.ay}, {"az", ch.az}};
}

PauliChannel channel_from_json(const Json& j) {
  PauliChannel ch;
  ch.ax = j.at("ax").get<double>();
  ch.ay = j.at("ay").get<double>();
  ch.az = j.at("az").get<double>();
  return ch;
}

Json state_to_json(const DensityMatrix2& rho) {
  return Json{{"p1", rho.p1}, {"p2", rho.p2}, {"c", complex_to_json(rho.c)}};
}

DensityMatrix2 state_from_json(const Json& j) {
  DensityMatrix2 rho;
  rho.p1 = j.at("p1").get<double>();
  rho.p2 = j.at("p2").get<double>();
  rho.c = complex_from_json(j.at("c"));
  return rho;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(cells[i]);
  }
  line += '\n';
  return line;
}

namespace {

std::string scalar_to_cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten_json(const Json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten_json(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array()) {
    bool scalars_only = true;
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) scalars_only = false;
    }
    if (scalars_only) {
      out.emplace_back(prefix, j.dump());
    } else {
      int idx = 0;
      for (const auto& v : j) flatten_json(v, prefix + "." + std::to_string(idx++), out);
    }
  } else {
    out.emplace_back(prefix, scalar_to_cell(j));
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

}  // namespace

std::string json_to_kv_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten_json(j, "", rows);
  std::string out = "key,value\n";
  for (const auto& [key, value] : rows) out += csv_line({key, value});
  return out;
}

Json csv_to_json(const std::string& csv) {
  std::vector<std::string> lines;
  std::string line;
  for (char c : csv) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) lines.push_back(line);
  if (lines.empty()) return Json::array();
  const std::vector<std::string> header = split_csv_line(lines[0]);
  Json rows = Json::array();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> cells = split_csv_line(lines[i]);
    Json row;
    for (std::size_t k = 0; k < header.size() && k < cells.size(); ++k) {
      const std::string& cell = cells[k];
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (!cell.empty() && end == cell.c_str() + cell.size()) {
        row[header[k]] = value;
      } else {
        row[header[k]] = cell;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string trajectory_csv(const SemigroupSpec& spec, double t_max, int steps) {
  if (steps < 1) throw std::domain_error("trajectory_csv: steps must be positive");
  std::string out = "t,re_u,im_u,re_w,im_w\n";
  for (int k = 0; k <= steps; ++k) {
    const double t = t_max * static_cast<double>(k) / steps;
    const CoordUW c = general_point(spec, t);
    out += csv_line({format_double(t), format_double(c.u.real()),
                     format_double(c.u.imag()), format_double(c.w.real()),
                     format_double(c.w.imag())});
  }
  return out;
}

std::string classify_sweep_csv(const std::vector<ClassifyRow>& rows) {
  std::string out = "phi,a,b,classifier_verdict,oracle_verdict,agree\n";
  for (const ClassifyRow& r : rows) {
    out += csv_line({format_double(r.phi), format_double(r.a), format_double(r.b),
                     to_string(r.verdict),
                     r.oracle_divisible ? "divisible" : "not_divisible",
                     r.agree ? "true" : "false"});
  }
  return out;
}

}  // namespace birkhoff
