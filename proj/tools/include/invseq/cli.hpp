#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invseq::cli {

// Exit codes: 0 success or all-match, 1 mismatch, 2 usage error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invseq::cli
