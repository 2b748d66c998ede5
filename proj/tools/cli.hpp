#pragma once

#include <ostream>

namespace bigeo::cli {

// Exit codes: 0 on success (including negative verdicts such as an invalid
// design or a failed BRC check), 2 on usage or operational errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bigeo::cli
