#include "qstar/io.hpp"

#include <cmath>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qstar/kernels.hpp"
#include "qstar/spin_tomography.hpp"

namespace qstar::io {

namespace {

std::vector<double> parse_numbers(const std::string& payload, std::size_t expected,
                                  const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(payload);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("'" + spec + "': '" + item + "' is not a number");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw ParseError("'" + spec + "': '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.size() != expected || (!payload.empty() && payload.back() == ',')) {
    throw ParseError("'" + spec + "': expected " + std::to_string(expected) +
                     " comma-separated numbers");
  }
  return out;
}

std::vector<std::vector<double>> read_rows(const Json& j, const char* key, std::size_t dim) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != dim) {
    throw ParseError(std::string("matrix JSON: '") + key + "' must be a " + std::to_string(dim) +
                     "x" + std::to_string(dim) + " array");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != dim) {
      throw ParseError(std::string("matrix JSON: row of '") + key + "' has the wrong length");
    }
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError(std::string("matrix JSON: non-numeric entry in '") + key + "'");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

PhasePoint parse_point_label(const std::string& label) {
  if (label.size() != 2 || (label[0] != '0' && label[0] != '1') ||
      (label[1] != '0' && label[1] != '1')) {
    throw ParseError("phase point label must be one of 00, 01, 10, 11, got '" + label + "'");
  }
  return PhasePoint{label[0] - '0', label[1] - '0'};
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real() + 0.0);  // folds -0.0
      ri.push_back(m(i, k).imag() + 0.0);
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  Json out;
  out["dim"] = m.rows();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("matrix JSON must be an object with an integer 'dim'");
  }
  const auto dim = j["dim"].get<long long>();
  if (dim < 1 || dim > 64) throw ParseError("matrix JSON: unsupported dim " + std::to_string(dim));
  const auto n = static_cast<std::size_t>(dim);
  const auto re = read_rows(j, "re", n);
  const auto im = read_rows(j, "im", n);
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(re[r][c], im[r][c]);
    }
  }
  return m;
}

Json wigner_to_json(const WignerFunction& w) {
  Json values;
  for (const PhasePoint& p : phase_points()) values[p.label()] = w(p);
  Json out;
  out["variant"] = std::string(1, variant_name(w.variant()));
  out["values"] = std::move(values);
  return out;
}

WignerFunction wigner_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string() ||
      !j.contains("values") || !j["values"].is_object()) {
    throw ParseError("Wigner JSON must have a string 'variant' and an object 'values'");
  }
  Variant variant;
  try {
    variant = parse_variant(j["variant"].get<std::string>());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  std::array<double, 4> v{};
  for (const PhasePoint& p : phase_points()) {
    const auto& values = j["values"];
    if (!values.contains(p.label()) || !values[p.label()].is_number()) {
      throw ParseError("Wigner JSON: missing numeric value for point " + p.label());
    }
    v[p.index()] = values[p.label()].get<double>();
  }
  return {variant, v};
}

DensityMatrix parse_state(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ParseError("state '" + spec + "' must look like bloch:x,y,z | polar:a,c,xi | matrix:@file.json");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string payload = spec.substr(colon + 1);
  if (kind == "bloch") {
    const auto v = parse_numbers(payload, 3, spec);
    return density_from_bloch(v[0], v[1], v[2]);
  }
  if (kind == "polar") {
    const auto v = parse_numbers(payload, 3, spec);
    return density_from_polar(v[0], v[1], v[2]);
  }
  if (kind == "matrix") {
    if (payload.size() < 2 || payload[0] != '@') {
      throw ParseError("matrix state must be given as matrix:@path/to/file.json");
    }
    Json doc;
    try {
      doc = Json::parse(read_file(payload.substr(1)));
    } catch (const Json::parse_error& e) {
      throw ParseError("cannot parse '" + payload.substr(1) + "': " + e.what());
    }
    return validate_density(matrix_from_json(doc));
  }
  throw ParseError("unknown state format '" + kind + "' (expected bloch, polar or matrix)");
}

std::string format_csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string tomogram_csv(const DensityMatrix& rho, const SphereQuadrature& grid) {
  std::string out = "m,theta,psi,w\n";
  for (SpinProjection m : kSpinProjections) {
    for (const SphereNode& node : grid.nodes()) {
      const Direction d(node.theta, node.psi);
      out += format_csv_double(spin_value(m)) + "," + format_csv_double(d.theta) + "," +
             format_csv_double(d.psi) + "," + format_csv_double(tomogram(rho, m, d)) + "\n";
    }
  }
  return out;
}

std::string kernel_csv(const std::vector<Variant>& variants, const SphereQuadrature& grid) {
  std::string out = "variant,dual,m,theta,psi,j,k,value\n";
  for (Variant variant : variants) {
    for (bool dual : {false, true}) {
      for (SpinProjection m : kSpinProjections) {
        for (const SphereNode& node : grid.nodes()) {
          const Direction d(node.theta, node.psi);
          for (const PhasePoint& p : phase_points()) {
            out += std::string(1, variant_name(variant)) + "," + (dual ? "1" : "0") + "," +
                   format_csv_double(spin_value(m)) + "," + format_csv_double(d.theta) + "," +
                   format_csv_double(d.psi) + "," + std::to_string(p.j) + "," +
                   std::to_string(p.k) + "," +
                   format_csv_double(kernel_value(variant, dual, m, d, p)) + "\n";
          }
        }
      }
    }
  }
  return out;
}

std::vector<OperatorFixture> load_operator_fixtures(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError("cannot parse fixture file '" + path + "': " + e.what());
  }
  if (!doc.contains("operators") || !doc["operators"].is_array()) {
    throw ParseError("fixture file '" + path + "' lacks an 'operators' array");
  }
  std::vector<OperatorFixture> out;
  for (const auto& entry : doc["operators"]) {
    if (!entry.contains("variant") || !entry.contains("point")) {
      throw ParseError("fixture entry lacks 'variant' or 'point'");
    }
    OperatorFixture f;
    try {
      f.variant = parse_variant(entry["variant"].get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    f.point = parse_point_label(entry["point"].get<std::string>());
    Json m = entry;
    m["dim"] = 2;
    f.matrix = matrix_from_json(m);
    out.push_back(f);
  }
  return out;
}

Json operator_fixtures_to_json(const std::vector<OperatorFixture>& fixtures) {
  Json ops = Json::array();
  for (const auto& f : fixtures) {
    Json m = matrix_to_json(f.matrix);
    Json entry;
    entry["variant"] = std::string(1, variant_name(f.variant));
    entry["point"] = f.point.label();
    entry["re"] = m["re"];
    entry["im"] = m["im"];
    ops.push_back(std::move(entry));
  }
  Json out;
  out["operators"] = std::move(ops);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qstar::io
