#pragma once

#include <iosfwd>

namespace scup {

// Exit codes: 0 success, 1 domain error, 2 usage error. Errors go to `err`
// as {"error": {"code", "message"}}.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scup
