#ifndef MZV_CLI_APP_HPP
#define MZV_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace mzv::cli
{

enum ExitCode : int {
    exit_ok = 0,
    exit_no_result = 1, // NotExpressible, no relation, failed certificate or battery
    exit_usage = 2,
    exit_internal = 3,
};

// Entry point of the mzv tool. args excludes the program name. Environment
// overrides (MZV_*) are read through std::getenv.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

// Problems with a JSON document printed by run(); empty when it matches the
// schema of its "command".
std::vector<std::string> json_schema_errors(const nlohmann::json &doc);

} // namespace mzv::cli

#endif
