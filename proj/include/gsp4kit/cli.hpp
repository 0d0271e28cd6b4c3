#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsp4kit/satake.hpp"

namespace gsp4kit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaPath = "schema/report.schema.json";
inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

// Oracle-equivalence suites; `table` lists the xi-permutations in weyl_enumerate() order.
Json run_selftest(const std::vector<XiAction>& table, std::uint64_t seed, bool* all_pass);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsp4kit
