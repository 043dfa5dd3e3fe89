#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coil/diagram.hpp"

namespace coil {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::int64_t oracle_cap = 8;
};

/// Oracle and property checks over all modules at moderate sizes. Checks
/// run on up to `jobs` threads; results keep a fixed order.
std::vector<CheckResult> verify_suite(const VerifyOptions& opts = {});

/// Structural checks of one diagram: Euler characteristic, PD round trip,
/// twist-region partition and SVG rendering.
std::vector<CheckResult> verify_diagram(const PlanarDiagram& d);

}  // namespace coil
