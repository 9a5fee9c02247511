#include "cli/run_config.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace groverlab::cli {

namespace {

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t");
    if (from == std::string::npos) return "";
    const auto to = s.find_last_not_of(" \t");
    return s.substr(from, to - from + 1);
}

double parse_number_full(const std::string& s) {
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw std::domain_error("not a number: '" + s + "'");
    }
    return value;
}

}  // namespace

std::string to_string(Command command) {
    switch (command) {
        case Command::kernel: return "kernel";
        case Command::sweep: return "sweep";
        case Command::figure: return "figure";
        case Command::validate: return "validate";
        case Command::scan: return "scan";
        default: return "scaling";
    }
}

Command parse_command(const std::string& name) {
    if (name == "kernel") return Command::kernel;
    if (name == "sweep") return Command::sweep;
    if (name == "figure") return Command::figure;
    if (name == "validate") return Command::validate;
    if (name == "scan") return Command::scan;
    if (name == "scaling") return Command::scaling;
    throw std::domain_error("unknown command '" + name + "'");
}

std::string to_string(OutputFormat format) {
    return format == OutputFormat::csv ? "csv" : "json";
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::domain_error("unknown output format '" + name + "' (expected csv|json)");
}

nlohmann::ordered_json config_to_json(const RunConfig& config) {
    nlohmann::ordered_json j;
    j["command"] = to_string(config.command);
    j["phases"] = config.phases;
    j["n"] = config.n;
    j["m"] = config.m;
    j["m_max"] = config.m_max;
    j["engine"] = to_string(config.engine);
    j["format"] = config.format ? nlohmann::ordered_json(to_string(*config.format))
                                : nlohmann::ordered_json(nullptr);
    j["out"] = config.out ? nlohmann::ordered_json(*config.out) : nlohmann::ordered_json(nullptr);
    j["figure"] = config.figure ? nlohmann::ordered_json(groverlab::to_string(*config.figure))
                                : nlohmann::ordered_json(nullptr);
    j["tol"] = config.tol;
    j["match_tol"] = config.match_tol;
    j["grid"] = config.grid;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& [n, m] : config.pairs) pairs.push_back({n, m});
    j["pairs"] = pairs;
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig config;
    if (!j.is_object()) throw std::domain_error("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "command") {
            config.command = parse_command(value.get<std::string>());
        } else if (key == "phases") {
            const auto arr = value.get<std::vector<double>>();
            if (arr.size() != 4) throw std::domain_error("phases must have 4 entries");
            for (std::size_t i = 0; i < 4; ++i) config.phases[i] = arr[i];
        } else if (key == "n") {
            config.n = value.get<std::int64_t>();
        } else if (key == "m") {
            config.m = value.get<std::int64_t>();
        } else if (key == "m_max") {
            config.m_max = value.get<std::int64_t>();
        } else if (key == "engine") {
            config.engine = parse_engine(value.get<std::string>());
        } else if (key == "format") {
            if (!value.is_null()) config.format = parse_output_format(value.get<std::string>());
        } else if (key == "out") {
            if (!value.is_null()) config.out = value.get<std::string>();
        } else if (key == "figure") {
            if (!value.is_null()) config.figure = parse_figure_id(value.get<std::string>());
        } else if (key == "tol") {
            config.tol = value.get<double>();
        } else if (key == "match_tol") {
            config.match_tol = value.get<double>();
        } else if (key == "grid") {
            config.grid = value.get<std::int64_t>();
        } else if (key == "pairs") {
            for (const auto& pair : value) {
                if (!pair.is_array() || pair.size() != 2) {
                    throw std::domain_error("pairs entries must be [N, M]");
                }
                config.pairs.emplace_back(pair[0].get<std::int64_t>(),
                                          pair[1].get<std::int64_t>());
            }
        } else {
            throw std::domain_error("unknown config key '" + key + "'");
        }
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::domain_error("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

double parse_phase_expr(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw std::domain_error("empty phase expression");

    const auto pos = s.find("pi");
    if (pos == std::string::npos) return parse_number_full(s);

    const std::string coeff_text = s.substr(0, pos);
    double coefficient = 1.0;
    if (coeff_text == "-") {
        coefficient = -1.0;
    } else if (!coeff_text.empty() && coeff_text != "+") {
        coefficient = parse_number_full(coeff_text);
    }

    const std::string rest = s.substr(pos + 2);
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/') {
            throw std::domain_error("bad phase expression '" + text + "'");
        }
        divisor = parse_number_full(rest.substr(1));
        if (divisor == 0.0) throw std::domain_error("division by zero in '" + text + "'");
    }
    return coefficient * kPi / divisor;
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value,
                      std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("failed to format double");
    return {buf.data(), ptr};
}

}  // namespace groverlab::cli
