#pragma once

#include <string>
#include <vector>

#include "drazinkit/scalar.hpp"

namespace drazinkit::cli {

struct FixtureOutcome {
  std::string fixture;
  std::string check;
  bool passed = false;
  std::string message;
};

/// Runs every `<name>.expected.json` sidecar in `dir` against `<name>.json`.
/// Sidecar: {"checks":[{"kind":"classify"|"drazin"|"block"|"intertwine", ...}]}.
/// Throws Error(Schema) for unreadable or malformed files, and rethrows a
/// precondition error that the sidecar did not name as expected.
std::vector<FixtureOutcome> verify_fixtures(const std::string& dir, Tolerance tol);

}  // namespace drazinkit::cli
