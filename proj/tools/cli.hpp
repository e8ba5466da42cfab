#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcc/bounds.hpp"
#include "bcc/oracle.hpp"

namespace bcc::cli {

enum ExitCode : int {
  ok = 0,
  parse_failure = 1,
  inconsistency = 2,
  precondition = 3,
  budget = 4,
};

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Overrides from a "key=value,..." string; keys: cover, vertices, clique,
/// tree, time_ms. Throws InputError on unknown keys or bad numbers.
OracleBudget parse_budget(const std::string& spec, OracleBudget base = {});

/// The fixed-schema JSON object for one report.
nlohmann::json report_json(const BoundReport& r);

}  // namespace bcc::cli
