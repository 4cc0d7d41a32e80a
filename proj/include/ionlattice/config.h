// Copyright 2026 The ionlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ionlattice/params.h"

namespace ionlattice {

// One settable configuration key, e.g. "timing.tau_b_us" or "channel.eta_cc".
struct ConfigKey {
    std::string name;
    std::string help;
};

// Every key accepted by apply_setting, in documentation order. Time keys are
// listed with both a _us (microseconds) and a _s (seconds) spelling.
const std::vector<ConfigKey> &config_keys();

// Parses `value` and stores it into the field named by `key`, converting
// microseconds to seconds where the key says so. Throws std::invalid_argument
// for unknown keys or malformed numbers.
void apply_setting(ParamBundle &bundle, std::string_view key, std::string_view value);

// Reads an INI-style file ([timing], [channel], [geometry], [thresholds],
// [multiplex] sections) on top of the "table2" preset. Does not validate.
ParamBundle parse_config(std::istream &in);
ParamBundle parse_config_text(const std::string &text);
ParamBundle load_config_file(const std::string &path);

// Writes every field in SI units with shortest round-trip formatting, so
// parse_config_text(serialize_config(b)) == b.
std::string serialize_config(const ParamBundle &bundle);

}  // namespace ionlattice
