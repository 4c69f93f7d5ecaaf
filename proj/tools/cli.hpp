#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace padicq::cli {

/// Exit codes. Computed verdicts, solvable or not, are successes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kInternalError = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Plain rendering of a structured report: one `key: value` line per scalar,
/// nested keys joined with '.', array elements indexed as key[i] when they are
/// objects, numeric arrays joined by ", ", and string arrays repeated one line
/// per element.
std::string render_plain(const nlohmann::ordered_json& doc);

}  // namespace padicq::cli
