#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "groverlab/analysis.hpp"

namespace groverlab::cli {

enum class Command { kernel, sweep, figure, validate, scan, scaling };
enum class OutputFormat { csv, json };

std::string to_string(Command command);
Command parse_command(const std::string& name);
std::string to_string(OutputFormat format);
OutputFormat parse_output_format(const std::string& name);

/// Everything a run depends on. A persisted config replayed on the same build
/// produces byte-identical output (all commands are deterministic and no
/// timestamps enter the data stream).
struct RunConfig {
    Command command = Command::kernel;
    std::array<double, 4> phases{0.0, 0.0, 0.0, 0.0};
    std::int64_t n = 1000;
    std::int64_t m = 10;
    std::int64_t m_max = -1;  ///< -1 means the per-command default
    Engine engine = Engine::reduced;
    std::optional<OutputFormat> format;  ///< default depends on the command
    std::optional<std::string> out;      ///< stdout when absent
    std::optional<FigureId> figure;      ///< figure/validate presets
    double tol = 1e-10;                  ///< validate tolerance
    double match_tol = kDefaultMatchTol;
    std::int64_t grid = 25;              ///< scan resolution per axis
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  ///< scaling (N, M) rows
};

nlohmann::ordered_json config_to_json(const RunConfig& config);

/// Fills a config from JSON on top of the defaults; unknown keys rejected.
RunConfig config_from_json(const nlohmann::json& j);

RunConfig load_config_file(const std::string& path);

/// Phase argument grammar: a plain decimal number, or a multiple of pi such
/// as "pi", "-pi", "1.7pi", "pi/2", "0.5pi/3". Throws std::domain_error.
double parse_phase_expr(const std::string& text);

/// Locale-independent shortest-correct formatting with 17 significant digits.
std::string format_double(double value);

}  // namespace groverlab::cli
