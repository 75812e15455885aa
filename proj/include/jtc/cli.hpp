#pragma once

#include <iosfwd>

namespace jtc::cli {

/// Entry point behind the `jtc` binary. Streams are injectable so tests can
/// capture output. Exit codes: 0 success, 1 usage/config error, 2 numerical
/// failure (non-convergence or a perturbation-theory pole).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jtc::cli
