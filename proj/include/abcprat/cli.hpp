#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace abcprat {

/// Output of one command: CSV rows followed by "# key=value" summary lines,
/// or the same data as a JSON document.
struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
};

inline constexpr int json_schema_version = 1;

std::string to_csv(Table const& t);
std::string to_json(Table const& t);

enum ExitCode { exit_ok = 0, exit_usage = 2, exit_failure = 3 };

/// Runs the command line (args excludes the program name). Table output goes
/// to `out` (or the --out file), diagnostics to `err`.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace abcprat
