// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "config.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "channel.hpp"
#include "errors.hpp"

namespace eb {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& value, int line) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw parse_error("malformed numeric value '" + value + "' at line " +
                              std::to_string(line),
                          line);
    return v;
}

long long parse_int(const std::string& value, int line) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw parse_error("malformed integer value '" + value + "' at line " +
                              std::to_string(line),
                          line);
    return v;
}

std::vector<double> parse_double_list(const std::string& value, int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), line));
    if (out.empty())
        throw parse_error("empty list value at line " + std::to_string(line), line);
    return out;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, int)>;

const std::map<std::string, Setter>& setters() {
    auto d = [](double ExperimentConfig::* field) {
        return [field](ExperimentConfig& c, const std::string& v, int line) {
            c.*field = parse_double(v, line);
        };
    };
    auto i = [](int ExperimentConfig::* field) {
        return [field](ExperimentConfig& c, const std::string& v, int line) {
            c.*field = static_cast<int>(parse_int(v, line));
        };
    };
    static const std::map<std::string, Setter> table = {
        {"geometry.columns", i(&ExperimentConfig::columns)},
        {"geometry.rows", i(&ExperimentConfig::rows)},
        {"geometry.carrier_frequency_hz", d(&ExperimentConfig::carrier_frequency_hz)},
        {"geometry.inter_site_distance_m", d(&ExperimentConfig::inter_site_distance_m)},
        {"geometry.tower_height_m", d(&ExperimentConfig::tower_height_m)},
        {"geometry.grid_spacing_m", d(&ExperimentConfig::grid_spacing_m)},
        {"geometry.grid_min_distance_m", d(&ExperimentConfig::grid_min_distance_m)},
        {"geometry.height_levels_m",
         [](ExperimentConfig& c, const std::string& v, int line) {
             c.height_levels_m = parse_double_list(v, line);
         }},
        {"channel.path_loss_exponent", d(&ExperimentConfig::path_loss_exponent)},
        {"channel.scatter_model",
         [](ExperimentConfig& c, const std::string& v, int line) {
             try {
                 scatter_model_from_string(v);
             } catch (const invalid_parameter_error& e) {
                 throw parse_error(std::string(e.what()) + " at line " + std::to_string(line),
                                   line);
             }
             c.scatter_model = v;
         }},
        {"channel.subbands", i(&ExperimentConfig::subbands)},
        {"channel.seed",
         [](ExperimentConfig& c, const std::string& v, int line) {
             c.seed = static_cast<std::uint64_t>(parse_int(v, line));
         }},
        {"analysis.rank_budget", i(&ExperimentConfig::rank_budget)},
        {"analysis.rf_chains", i(&ExperimentConfig::rf_chains)},
        {"netmap.rings", i(&ExperimentConfig::rings)},
        {"netmap.sectors", i(&ExperimentConfig::sectors)},
        {"netmap.tx_power_w", d(&ExperimentConfig::tx_power_w)},
        {"netmap.bandwidth_hz", d(&ExperimentConfig::bandwidth_hz)},
        {"netmap.downtilt_deg", d(&ExperimentConfig::downtilt_deg)},
        {"netmap.noise_figure_db", d(&ExperimentConfig::noise_figure_db)},
        {"netmap.map_spacing_m", d(&ExperimentConfig::map_spacing_m)},
        {"netmap.path_loss_exponent", d(&ExperimentConfig::netmap_path_loss_exponent)},
        {"netmap.horizontal_beamwidth_deg", d(&ExperimentConfig::horizontal_beamwidth_deg)},
        {"netmap.vertical_beamwidth_deg", d(&ExperimentConfig::vertical_beamwidth_deg)},
        {"netmap.front_to_back_db", d(&ExperimentConfig::front_to_back_db)},
        {"netmap.max_gain_dbi", d(&ExperimentConfig::max_gain_dbi)},
        {"netmap.rx_height_m", d(&ExperimentConfig::rx_height_m)},
        {"output.directory",
         [](ExperimentConfig& c, const std::string& v, int) { c.output_directory = v; }},
    };
    return table;
}

} // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig config;
    std::istringstream is(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw parse_error("unterminated section header at line " +
                                      std::to_string(line_no),
                                  line_no);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected key = value at line " + std::to_string(line_no),
                              line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string qualified = section.empty() ? key : section + "." + key;
        const auto it = setters().find(qualified);
        if (it == setters().end()) throw unknown_key_error(qualified, line_no);
        it->second(config, value, line_no);
    }
    return config;
}

std::string serialize_config(const ExperimentConfig& c) {
    std::ostringstream os;
    os.precision(17);
    os << "[geometry]\n";
    os << "columns = " << c.columns << '\n';
    os << "rows = " << c.rows << '\n';
    os << "carrier_frequency_hz = " << c.carrier_frequency_hz << '\n';
    os << "inter_site_distance_m = " << c.inter_site_distance_m << '\n';
    os << "tower_height_m = " << c.tower_height_m << '\n';
    os << "grid_spacing_m = " << c.grid_spacing_m << '\n';
    os << "grid_min_distance_m = " << c.grid_min_distance_m << '\n';
    os << "height_levels_m = ";
    for (std::size_t i = 0; i < c.height_levels_m.size(); ++i) {
        if (i) os << ',';
        os << c.height_levels_m[i];
    }
    os << '\n';
    os << "\n[channel]\n";
    os << "path_loss_exponent = " << c.path_loss_exponent << '\n';
    os << "scatter_model = " << c.scatter_model << '\n';
    os << "subbands = " << c.subbands << '\n';
    os << "seed = " << c.seed << '\n';
    os << "\n[analysis]\n";
    os << "rank_budget = " << c.rank_budget << '\n';
    os << "rf_chains = " << c.rf_chains << '\n';
    os << "\n[netmap]\n";
    os << "rings = " << c.rings << '\n';
    os << "sectors = " << c.sectors << '\n';
    os << "tx_power_w = " << c.tx_power_w << '\n';
    os << "bandwidth_hz = " << c.bandwidth_hz << '\n';
    os << "downtilt_deg = " << c.downtilt_deg << '\n';
    os << "noise_figure_db = " << c.noise_figure_db << '\n';
    os << "map_spacing_m = " << c.map_spacing_m << '\n';
    os << "path_loss_exponent = " << c.netmap_path_loss_exponent << '\n';
    os << "horizontal_beamwidth_deg = " << c.horizontal_beamwidth_deg << '\n';
    os << "vertical_beamwidth_deg = " << c.vertical_beamwidth_deg << '\n';
    os << "front_to_back_db = " << c.front_to_back_db << '\n';
    os << "max_gain_dbi = " << c.max_gain_dbi << '\n';
    os << "rx_height_m = " << c.rx_height_m << '\n';
    os << "\n[output]\n";
    os << "directory = " << c.output_directory << '\n';
    return os.str();
}

void validate_config(const ExperimentConfig& c) {
    if (c.columns < 1 || c.rows < 1)
        throw invalid_parameter_error("config: array dimensions must be >= 1");
    if (!(c.carrier_frequency_hz > 0.0))
        throw invalid_parameter_error("config: carrier frequency must be positive");
    if (!(c.inter_site_distance_m > 0.0) || !(c.tower_height_m > 0.0))
        throw invalid_parameter_error("config: layout dimensions must be positive");
    if (!(c.grid_spacing_m > 0.0))
        throw invalid_parameter_error("config: grid spacing must be positive");
    if (c.grid_min_distance_m < 0.0)
        throw invalid_parameter_error("config: grid minimum distance must be nonnegative");
    if (c.subbands < 1) throw invalid_parameter_error("config: subbands must be >= 1");
    if (c.rank_budget < 1 || c.rank_budget > c.columns * c.rows)
        throw invalid_parameter_error("config: rank budget must lie in [1, N]");
    if (c.rf_chains < 1) throw invalid_parameter_error("config: rf chains must be >= 1");
    if (c.rings < 0) throw invalid_parameter_error("config: rings must be >= 0");
    if (c.sectors < 1 || c.sectors > 3)
        throw invalid_parameter_error("config: sectors must lie in [1, 3]");
    if (!(c.tx_power_w > 0.0) || !(c.bandwidth_hz > 0.0))
        throw invalid_parameter_error("config: power and bandwidth must be positive");
    scatter_model_from_string(c.scatter_model);
}

} // namespace eb
