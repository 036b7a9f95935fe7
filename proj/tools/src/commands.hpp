#pragma once

#include <functional>
#include <string>
#include <vector>

#include "params.hpp"
#include "results.hpp"

namespace photonpath::cli {

using Runner = std::function<void(Results&)>;

// prepare() reads and schema-checks the params table (ConfigError on any
// problem) and returns the computation, which may raise DomainError.
struct Command {
  std::string name;
  std::function<Runner(const Params&)> prepare;
};

const std::vector<Command>& commands();
const Command* find_command(const std::string& name);

}  // namespace photonpath::cli
