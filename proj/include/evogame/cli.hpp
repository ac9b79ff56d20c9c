#pragma once

#include <iosfwd>

namespace evogame {

// Entry point of the `evogame` tool. Returns the process exit code:
// 0 success, 1 usage error, 2 validation error, 3 numeric failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace evogame
