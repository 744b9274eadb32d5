#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drazinkit::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,      // a mathematical verdict differs from the expected one
  kIoOrSchema = 2,    // unreadable file, malformed JSON, bad flags
  kPrecondition = 3,  // NotInClass, NotCommuting, ...
};

/// Parses `args` (without the program name), runs exactly one verb and
/// returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drazinkit::cli
