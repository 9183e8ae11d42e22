#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scenario.hpp"

namespace torschain::cli {

using Json = nlohmann::ordered_json;

struct CommandArgs {
  std::string command;
  std::string scenario;
  bool json = false;
  std::uint64_t seed = 1;
  int count = 20;
  std::optional<std::string> chain, chain2, module, module2, bound, form, cls, members, eps, t;
};

struct CommandResult {
  int exit_code = 0;
  std::string text;
  Json json;
};

const std::vector<std::string>& command_names();

// Library exceptions propagate; run() maps them to exit codes.
CommandResult run_command(const CommandArgs& args, const Scenario& scenario);

// Loads the scenario, dispatches, writes the report (text or --json) to out
// and diagnostics to err. Returns the process exit code.
int run(const CommandArgs& args, std::ostream& out, std::ostream& err);

}  // namespace torschain::cli
