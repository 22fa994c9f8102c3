#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "endogate/polynomial.hpp"

namespace endogate::reports {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exit codes: 0 success / positive verdict, 1 usage or parse error,
/// 2 out of hypothesis, 3 internal violation (a theorem contradiction).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitOutOfHypothesis = 2;
inline constexpr int kExitViolation = 3;

struct RunConfig {
    std::uint64_t prime_budget = 10000;
    std::size_t max_n = 33;
    std::size_t spin_cap = 21;
    std::size_t trials = 100;
    std::uint64_t rng_seed = 0;
};

struct CommandResult {
    Json report;
    int exit_code = kExitOk;
};

/// `source` describes where the polynomial came from (echoed in the report).
CommandResult run_certify(const galois::ParsedPoly& input, const std::string& source,
                          const RunConfig& config);

CommandResult run_dichotomy(std::size_t n, const RunConfig& config);

CommandResult run_lemmas(std::size_t n, const RunConfig& config);

CommandResult run_two_torsion(std::size_t n, const RunConfig& config);

CommandResult run_reduce_even(const galois::ParsedPoly& input, const std::string& source,
                              const RunConfig& config);

/// Human-readable rendering of a report tree: one `path = value` line per leaf.
std::string render_text(const Json& report);

}  // namespace endogate::reports
