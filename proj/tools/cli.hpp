#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace crsym::cli {

struct Outcome {
  int code = 0;             // 0 ok, 1 domain error, 2 usage error
  nlohmann::json report;    // null when only help text was requested
  std::string help;
};

inline constexpr const char* kTool = "crsym";
inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand; args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace crsym::cli
