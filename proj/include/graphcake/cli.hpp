#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcake {

/// Runs one command line (without the program name). Returns 0 on success, 1 on usage,
/// parse or precondition errors and 2 when a computed allocation fails its own guarantee.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace graphcake
