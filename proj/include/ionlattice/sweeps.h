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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ionlattice/codecycle.h"
#include "ionlattice/noise.h"
#include "ionlattice/params.h"
#include "ionlattice/report.h"

namespace ionlattice {

std::vector<double> logspace(double lo, double hi, int count);
// count evenly spaced values from lo to hi rounded to integers, duplicates dropped.
std::vector<int> integer_linspace(int lo, int hi, int count);

// Tags accepted by sweep_table.
const std::vector<std::string> &sweep_tags();

// Figure data for fig6, fig9, fig10, fig11, fig13, fig14 and the three ft
// grids. Throws std::invalid_argument for an unknown tag.
Table sweep_table(std::string_view tag, const ParamBundle &bundle);

Table feasibility_table(const FeasibilityGrid &grid);
Table boundary_table(const FeasibilityGrid &grid);
Table repeater_table(const std::vector<RepeaterComparisonRow> &rows);

// Single-point resource estimate. p overrides the channel-derived value.
Table estimate_table(const ParamBundle &bundle, std::optional<double> p);

}  // namespace ionlattice
