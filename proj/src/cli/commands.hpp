#pragma once

#include <iosfwd>

#include "cli/run_config.hpp"

namespace groverlab::cli {

inline constexpr const char* kToolName = "groverlab";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command. Data goes to `data` (or to config.out plus a
/// `<out>.meta.json` sidecar holding the resolved config); diagnostics go to
/// `diag` only. Exit codes: 0 success, 1 validation tolerance failure,
/// 2 invalid parameters, 3 resource guard.
int run_command(const RunConfig& config, std::ostream& data, std::ostream& diag);

// Individual commands; throw std::domain_error / ResourceLimitError on bad
// input, return the exit code otherwise.
int cmd_kernel(const RunConfig& config, std::ostream& data);
int cmd_sweep(const RunConfig& config, std::ostream& data);
int cmd_figure(const RunConfig& config, std::ostream& data);
int cmd_validate(const RunConfig& config, std::ostream& data);
int cmd_scan(const RunConfig& config, std::ostream& data);
int cmd_scaling(const RunConfig& config, std::ostream& data);

}  // namespace groverlab::cli
