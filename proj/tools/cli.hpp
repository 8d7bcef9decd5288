#pragma once

#include <ostream>

namespace conic::cli {

// Full command line driver, separated from main() so tests can run it
// in-process. Returns the process exit code: 0 on success, 2 for bad
// usage or unparseable input, 3 when the request is outside a
// function's domain (wrong conic type, off-curve point, ...).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conic::cli
