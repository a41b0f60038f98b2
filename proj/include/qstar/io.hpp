#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "qstar/linalg.hpp"
#include "qstar/phase_space.hpp"
#include "qstar/quadrature.hpp"
#include "qstar/wigner.hpp"

namespace qstar::io {

using Json = nlohmann::ordered_json;

/// {"dim": n, "re": [[...]], "im": [[...]]}
Json matrix_to_json(const ComplexMatrix& m);
/// Throws ParseError on a malformed document.
ComplexMatrix matrix_from_json(const Json& j);

/// {"variant": "A", "values": {"00": ..., "01": ..., "10": ..., "11": ...}}
Json wigner_to_json(const WignerFunction& w);
WignerFunction wigner_from_json(const Json& j);

/// Parses `bloch:x,y,z`, `polar:a,c,xi` or `matrix:@file.json`.
/// Syntax problems throw ParseError; unphysical states throw DomainError
/// (or one of its PhysicalityError subclasses).
DensityMatrix parse_state(const std::string& spec);

/// 17 significant digits in scientific notation, e.g. 2.5000000000000000e-01.
std::string format_csv_double(double v);

/// Rows (m, theta, psi, w) over the quadrature nodes.
std::string tomogram_csv(const DensityMatrix& rho, const SphereQuadrature& grid);

/// Rows (variant, dual, m, theta, psi, j, k, value) over the quadrature nodes.
std::string kernel_csv(const std::vector<Variant>& variants, const SphereQuadrature& grid);

/// One entry of the phase-point operator fixture file.
struct OperatorFixture {
  Variant variant = Variant::A;
  PhasePoint point;
  Matrix2c matrix;
};

/// Reads {"operators": [{"variant": "A", "point": "00", "re": ..., "im": ...}, ...]}.
std::vector<OperatorFixture> load_operator_fixtures(const std::string& path);
Json operator_fixtures_to_json(const std::vector<OperatorFixture>& fixtures);

std::string read_file(const std::string& path);

}  // namespace qstar::io
