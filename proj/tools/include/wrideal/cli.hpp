#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wrideal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitViolation = 2;

struct CommandResult {
  nlohmann::json output;
  int exit_code = kExitOk;
};

// A job is {"command": <name>, "parameters": {...}}; command input travels in
// parameters.input. Throws wrideal::Error on invalid jobs.
CommandResult run_job(const nlohmann::json& job);

// Parses text as JSON; malformed text raises Error naming line and column.
nlohmann::json parse_json(const std::string& text, const std::string& source);

// Full command line (args excludes the program name). Writes the output
// document to out and diagnostics to err; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wrideal::cli
