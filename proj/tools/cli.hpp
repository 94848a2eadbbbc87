#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "sqf/construct.hpp"

namespace sqf::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kNotInSpectrum = 3,
    kBudget = 4,
};

/// Runs one invocation; args[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json to_json(const ConstructionResult& r);

}  // namespace sqf::cli
