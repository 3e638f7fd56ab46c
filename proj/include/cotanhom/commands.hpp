#pragma once

#include <cstdint>
#include <string>

namespace cotanhom::commands {

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kInputError = 2 };

struct CommandOutcome {
    int exit_code = kSuccess;
    /// What goes to stdout: text, or a JSON document when requested.
    std::string output;
    /// Diagnostics for stderr.
    std::string error;
};

/// Source is "builtin:<name>" or a path to a cell-complex or cochain-complex
/// JSON file. Prints homology dimensions and the Euler characteristic
/// computed both ways.
CommandOutcome homology(const std::string& source, bool json);

/// Genus of a cell complex; exit 1 when it is not a closed connected
/// orientable surface.
CommandOutcome classify(const std::string& source, bool json);

/// Floer cohomology of two representations ("builtin:<name>" or JSON file).
/// When the differential is undefined only chi is reported.
CommandOutcome floer(const std::string& first, const std::string& second, bool json);

struct VerifyOptions {
    std::string theorem;  // sphere | torus | concentrated
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::size_t max_dim = 3;
    unsigned threads = 1;
    bool json = false;
};

/// Exit 0 iff the sweep records no violation; exit 2 on bad options.
CommandOutcome verify(const VerifyOptions& options);

}  // namespace cotanhom::commands
