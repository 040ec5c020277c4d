#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace gz0 {

using json = nlohmann::ordered_json;

/// Resolved configuration of one run; every field lands in the report so a
/// run can be reproduced from its own output.
struct RunConfig {
  std::string group = "Z";
  int rmax = 12;
  int window = 4;
  int r = 20;
  std::uint64_t m = 20;
  int big_r = 30;  // topology scale R
  int depth = -1;  // chain depth override (-1: oracle default)
  std::string subset_a;
  std::string subset_b;  // empty: complement of A
  std::string topology;  // topology spec string
  std::string x_expr;
  std::string z_expr;
  std::string side = "right";  // right | left | both
  std::uint64_t seed = 42;
  std::uint64_t count = 50;   // consistency partition count
  std::string kind = "hash";  // hash | annulus
  std::string json_path;
  std::size_t element_cap = 5'000'000;
};

struct RunOutcome {
  json report;
  int exit_code = 0;  // 0 ok, 1 error, 2 violation
};

/// Commands: ends, stability, witness, witness-cyclic, prop10, topology,
/// census, consistency. Unknown commands and bad inputs produce an error
/// report with exit code 1; VIOLATION verdicts force exit code 2.
RunOutcome run(const std::string& command, const RunConfig& cfg);

/// Element cap from GZ0_ELEMENT_CAP, falling back to the default.
std::size_t element_cap_from_env();

}  // namespace gz0
