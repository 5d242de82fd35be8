#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtop::cli {

/// Batch dispatcher behind the command-line tool. Returns the process exit
/// code: 0 success, 1 size-cap exhaustion, 2 parse/validation errors.
/// Output is deterministic byte-for-byte for fixed inputs and options.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtop::cli
