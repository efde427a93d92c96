#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace addcomp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,         ///< bad flags, or a precondition/domain violation
  kCertificateFailed = 2,  ///< a requested check failed; stderr names it
};

struct Environment {
  std::uint64_t default_N = 100'000;
};

/// Reads ADDCOMP_DEFAULT_N. Throws PreconditionError when it is set but not
/// a positive integer.
Environment read_environment();

/// Runs one command. `args` excludes the program name. Output is
/// byte-identical for identical arguments and environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace addcomp::cli
