#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rbh4/json_io.hpp"

namespace rbh4 {

/// Options shared by every command. `strategy` may be "auto": exhaustive for
/// p = 3, backtracking otherwise.
struct RunConfig {
    std::string command;
    std::optional<std::uint32_t> p;
    std::string weight = "1";
    std::string strategy = "auto";
    std::string scope;
    std::string out;
    std::size_t shards = 1;
    std::uint64_t seed = 1;
    bool bless = false;
    std::string golden_dir;
    std::size_t samples = 0;  // 0: command default
};

struct RunResult {
    Json results;
    /// 0 all checks pass, 1 verification mismatch.
    int exit_code = 0;
};

Json config_json(const RunConfig& cfg);
/// {"tool_version", "config", "results"}.
Json envelope(const RunConfig& cfg, const Json& results);

/// Validates the config; throws InvalidModulus, WeightMismatch, ParseError or
/// InvalidParams for usage errors.
void check_config(const RunConfig& cfg);

RunResult run_enumerate(const RunConfig& cfg);
RunResult run_classify(const RunConfig& cfg);
RunResult run_verify(const RunConfig& cfg);
RunResult run_report(const RunConfig& cfg);
RunResult run_command(const RunConfig& cfg);

/// Individual verification passes, also used by the acceptance suite.
RunResult verify_families(const std::vector<Scalar>& weights, std::size_t samples, std::uint64_t seed);
RunResult verify_corollary_run(const Scalar& weight, std::size_t samples, std::uint64_t seed);
RunResult verify_subalgebras(std::uint32_t p);
RunResult verify_kernel_theorems_run(std::uint32_t p, std::uint32_t lambda, Strategy strategy, std::size_t shards);

std::string golden_file_name(std::uint32_t p, std::uint32_t lambda, Strategy strategy);

}  // namespace rbh4
