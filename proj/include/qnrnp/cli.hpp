#pragma once

#include <iosfwd>

namespace qnrnp::cli {

// Full command-line front end. Streams are injectable for tests; data goes
// to `out`, diagnostics to `err`. Returns the process exit code:
//   0 success, 1 usage error, 2 domain/precision error,
//   3 a verification suite found a failing item, 4 resource limit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

} // namespace qnrnp::cli
