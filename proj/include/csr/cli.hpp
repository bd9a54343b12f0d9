// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace csr {

// Full command-line entry point. Writes the report to `out` and diagnostics
// to `err`; returns the process exit status (0 success, 1 domain/numerical
// error, 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace csr
