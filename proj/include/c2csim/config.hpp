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

#ifndef C2CSIM_CONFIG_HPP
#define C2CSIM_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "c2csim/simulation.hpp"

namespace c2csim {

/// Applies one "key = value" setting. Unknown keys and unparsable values
/// throw std::invalid_argument.
void apply_config_key(SimConfig& config, std::string_view key, std::string_view value);

/// Flat key-value config file: one "key = value" per line, '#' starts a
/// comment, blank lines ignored. Settings are applied on top of `base`.
SimConfig load_config_file(const std::filesystem::path& path, SimConfig base);

} // namespace c2csim

#endif
