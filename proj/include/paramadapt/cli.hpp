// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "paramadapt/adapt.hpp"

namespace paramadapt::cli {

using nlohmann::json;

inline constexpr const char* kTraceSchema = "paramadapt.trace/1";

enum ExitCode : int {
  kOk = 0,
  kPartialFailure = 1,
  kInvalidConfig = 2,
  kInputError = 3,
};

/// Thrown for malformed or inconsistent run configurations (exit 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunSpec {
  std::filesystem::path fcidump;   // resolved against the config directory
  std::string fcidump_as_written;  // echoed into traces
  std::string name;
  adapt::AdaptConfig config;
};

struct RunConfig {
  std::vector<RunSpec> runs;  // one per criterion; "both" yields gradient then parameter
};

/**
 * Parses a run document. Keys: fcidump, name, criterion (gradient | parameter
 * | both), start, epsilon, grad_norm_tol, k_max, pool, eta, optimizer{gtol,
 * max_evals}. Unknown keys are rejected. `criterion_override` replaces the
 * document's criterion. With `grid` set, the document must carry a `grid`
 * array instead of `fcidump`, and one RunConfig per fixture is produced.
 */
RunConfig parse_run_config(const json& doc, const std::filesystem::path& base_dir,
                           const std::optional<std::string>& criterion_override = std::nullopt);
std::vector<RunConfig> parse_sweep_config(const json& doc, const std::filesystem::path& base_dir);

json convention_header();
json trace_to_json(const adapt::AdaptTrace& t);
adapt::AdaptTrace trace_from_json(const json& j);

/// k, energy, error_vs_fci, cumulative_cost, chosen_op, score, initial_param.
std::string trace_csv(const adapt::AdaptTrace& t);

/// "<name>_<criterion>_<start>"
std::string trace_stem(const adapt::AdaptTrace& t);

struct Milestone {
  std::optional<std::size_t> k;  // first iteration reaching the target
  std::uint64_t cost = 0;        // cumulative cost at k
};

Milestone first_reaching(const adapt::AdaptTrace& t, double target_error);

/// 100 (a - b) / a, as printed by `compare`.
double reduction_percent(double a, double b);

/// Runs one spec end to end (load, FCI reference, pool, adaptive loop).
adapt::AdaptTrace execute(const RunSpec& spec);

/// Entry point for the `padapt` tool. Returns the process exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paramadapt::cli
