#ifndef HILLWALK_CLI_HPP
#define HILLWALK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hillwalk {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verify failures and otherwise unclassified errors
  kExitSingular = 2,
  kExitLocalization = 3,
  kExitCriteria = 4,
  kExitUsage = 64,
};

// Built-in configuration for a preset name, or throws for unknown names.
nlohmann::json preset_config(const std::string& name);

// args excludes the program name. Reports go to out (or --out), diagnostics
// to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hillwalk

#endif  // HILLWALK_CLI_HPP
