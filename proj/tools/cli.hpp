#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvalg::cli {

/// Runs one solvalg invocation; args excludes the program name. Returns the
/// process exit status: 0 success, 1 a failed check, 2 usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvalg::cli
