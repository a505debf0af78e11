#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace seqforge::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kInvalidInput = 2,
    kConventionUnresolved = 3,
};

/// Fixture directory: $SEQFORGE_FIXTURES if set, else the directory baked in at build time.
std::filesystem::path fixture_dir();

/// Runs one command line (args exclude the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqforge::cli
