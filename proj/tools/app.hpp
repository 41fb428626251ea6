#pragma once

#include <ostream>

namespace asmgyr::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kCapExceeded = 3,
};

/// Entry point of the `asmgyr` binary. Configuration precedence is flag,
/// then ASMGYR_* environment variable, then default.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace asmgyr::cli
