#pragma once

#include <iosfwd>

namespace ballotworks {

// Full command-line front end. argv is what main receives (argv[0] is the
// program name). Reports go to `out`, usage and error messages to `err`.
// Exit codes: 0 success, 1 bad input or usage, 2 unresolved tie under the
// error tie policy.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ballotworks
