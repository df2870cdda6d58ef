#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hirz/suites.hpp"

namespace hirz {

/// A parsed command line: the subcommand name and its option values by long name
/// ("expr", "motivic", "space", "space-file", "series", "n", "k", "op", "suite", "order").
struct Command {
  std::string name;
  std::map<std::string, std::string> args;
};

/// Outcome of a command. Values are canonical text so reports diff cleanly.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<SuiteResult> suites;

  bool failed() const;
};

/// Runs one command. Throws ParseError, InvalidParameter, NotPolynomial,
/// MissingLogStructure or UnsupportedMap.
Report execute(const Command& command);

/// A single result prints as its bare value; several print as "name: value" lines;
/// suites print one summary line each plus their failing identities.
std::string render_text(const Report& report);
/// {"command", "inputs", "results", "suites"}
std::string render_json(const Report& report);

/// Entry point of the `hirz` executable. Exit codes: 0 success, 1 a verified identity
/// failed, 2 usage, parse or parameter error. `order_env` is the value of HIRZ_ORDER, if set.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const char* order_env = nullptr);

}  // namespace hirz
