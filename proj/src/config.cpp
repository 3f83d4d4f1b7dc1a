/* Copyright 2026 The c2csim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "c2csim/config.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace c2csim {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::invalid_argument("invalid value for " + std::string(key) + ": " +
                                    std::string(value));
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1") {
        return true;
    }
    if (value == "false" || value == "0") {
        return false;
    }
    throw std::invalid_argument("invalid value for " + std::string(key) + ": " +
                                std::string(value));
}

} // namespace

void apply_config_key(SimConfig& config, std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "nodes") {
        config.nodes = parse_number<int>(key, value);
    } else if (key == "k") {
        config.k = parse_number<int>(key, value);
    } else if (key == "alpha") {
        config.alpha = parse_number<double>(key, value);
    } else if (key == "pretrust_count") {
        config.pretrust_count = parse_number<int>(key, value);
    } else if (key == "attacker_ratio") {
        config.attacker_ratio = parse_number<double>(key, value);
    } else if (key == "spy_ratio") {
        config.spy_ratio = parse_number<double>(key, value);
    } else if (key == "c") {
        config.c = parse_number<double>(key, value);
    } else if (key == "e") {
        config.e = parse_number<double>(key, value);
    } else if (key == "f") {
        config.f = parse_number<double>(key, value);
    } else if (key == "incubation_period") {
        config.incubation_period = parse_number<int>(key, value);
    } else if (key == "total_ticks") {
        config.total_ticks = parse_number<int>(key, value);
    } else if (key == "model") {
        config.model = parse_threat_model(value);
    } else if (key == "damping") {
        config.damping = parse_number<double>(key, value);
    } else if (key == "eps") {
        config.eps = parse_number<double>(key, value);
    } else if (key == "max_iter") {
        config.max_iter = parse_number<int>(key, value);
    } else if (key == "collusion_bias") {
        config.collusion_bias = parse_number<double>(key, value);
    } else if (key == "seed") {
        config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "transactions_per_tick") {
        config.transactions_per_tick = parse_number<int>(key, value);
    } else if (key == "recompute_per_transaction") {
        config.recompute_per_transaction = parse_bool(key, value);
    } else {
        throw std::invalid_argument("unknown config key: " + std::string(key));
    }
}

SimConfig load_config_file(const std::filesystem::path& path, SimConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path.string());
    }
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto equals = view.find('=');
        if (equals == std::string_view::npos) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_number) +
                                        ": expected key = value");
        }
        apply_config_key(base, view.substr(0, equals), view.substr(equals + 1));
    }
    return base;
}

} // namespace c2csim
