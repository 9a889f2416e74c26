#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsg/semigroup.hpp"

namespace nsg::cli {

using Json = nlohmann::ordered_json;

/// The document every command produces. `verified` is false when a command
/// checked something and it did not hold.
struct Output {
  Json doc;
  bool verified = true;
};

Output make_output(std::string command, Json inputs);

Output cmd_profile(const std::vector<Int>& generators, bool allow_scaled,
                   const OracleLimits& limits);

struct FamilyArgs {
  Int r1 = 0, r2 = 0, r3 = 0;
  std::string action;
  Int k = 0;
  Int from = 0, to = 0;
};

Output cmd_family(const FamilyArgs& args, const OracleLimits& limits);

Output cmd_verify_arnold(const OracleLimits& limits);

Output cmd_enumerate_small(std::optional<Int> r1, const OracleLimits& limits);

}  // namespace nsg::cli
