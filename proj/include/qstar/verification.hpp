#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qstar {

struct CheckResult {
  std::string id;        // stable identifier, e.g. "wigner.reconstruction"
  std::string identity;  // the relation being checked, in plain notation
  std::size_t samples = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string error;  // set when the check threw
};

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  std::size_t samples = 200;
};

/// Runs every identity of the quantizer/dequantizer framework that this
/// library implements and reports the worst residual per check. Results come
/// back in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

/// Identifiers run_verification reports, in order.
std::vector<std::string> verification_check_ids();

}  // namespace qstar
