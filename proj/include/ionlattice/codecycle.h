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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ionlattice/params.h"

namespace ionlattice {

// Duration of one generation time step T = m tau + tau_H + 3 tau_b.
struct TimeStep {
    double seconds = 0;
    // Set when tau_c is configured and does not exceed T.
    std::optional<std::string> warning;
};

// Cumulative stage times of one code cycle: build both layers (5T), measure
// layer I, rebuild the links (5T), measure layer II.
struct CodeCycleSchedule {
    double T = 0;
    double tau1 = 0;
    double tau2 = 0;
    double tau3 = 0;
    double tau4 = 0;
    double m_used = 0;
    std::optional<int> M_used;
};

// Memory and communication ion totals for the two-layer cell. The *_exact
// fields keep the real-valued analytic counts; the integer fields are their
// ceilings.
struct IonBudget {
    double memory_ions_exact = 0;
    double communication_ions_exact = 0;
    std::int64_t memory_ions = 0;
    std::int64_t communication_ions = 0;
    int reuse_window_j = 0;
    bool with_repeaters = false;
    int n_repeaters = 0;
    double m = 0;
    double M = 0;  // M without repeaters, M' with
};

TimeStep time_step_duration(const TimingParams &timing, double m, double tau_H);

CodeCycleSchedule code_cycle_schedule(const TimingParams &timing, double m, double tau_H);

// Substitutes m(M, p) = log(1 - p_th) / (M log(1 - p)) into the schedule.
CodeCycleSchedule code_cycle_for_probability(const TimingParams &timing, double p, int M, double p_th, double tau_H);

// Derives p and tau_H from the channel and distance, then calls
// code_cycle_for_probability.
CodeCycleSchedule code_cycle_from_probability(const TimingParams &timing, const ChannelParams &channel,
                                              double distance_km, int M, double p_th);

// Clock cycles before a communication-ion batch can be reused: ceil(3 tau_b / tau).
int reuse_window(const TimingParams &timing);

// 2 * bond_count * M * m memory ions and 2 * bond_count * M * min(j, m)
// communication ions for an explicit plan.
IonBudget ion_budget_from_plan(double M, double m, const TimingParams &timing, const Geometry &geometry);

// Budget at the m implied by p, M and p_th.
IonBudget ion_budget_without_repeaters(double p, int M, double p_th, const TimingParams &timing,
                                       const Geometry &geometry);

// Budget with n repeaters per link at temporal degree m; M' is solved from
// the chain-success target.
IonBudget ion_budget_with_repeaters(const ChannelParams &channel, double distance_km, int n, double m, double p_th,
                                    const TimingParams &timing, const Geometry &geometry);

struct RepeaterComparisonRow {
    double distance_km = 0;
    int n_repeaters = 0;
    double memory_without = 0;
    double memory_with = 0;
    double communication_without = 0;
    double communication_with = 0;
};

struct RepeaterComparisonSpec {
    std::vector<double> distances_km;
    std::vector<int> repeater_counts;
    double m = 1;
    double p_th = 0.855;
};

// Twenty evenly spaced distances 10, 20, ..., 200 km.
std::vector<double> default_distance_grid(double max_km = 200.0, int count = 20);

// One row per (L, n), ordered by L then by n. Rows are computed in parallel.
std::vector<RepeaterComparisonRow> repeater_comparison_table(const RepeaterComparisonSpec &spec,
                                                             const TimingParams &timing, const Geometry &geometry,
                                                             const ChannelParams &channel);

namespace serial {

std::vector<RepeaterComparisonRow> repeater_comparison_table(const RepeaterComparisonSpec &spec,
                                                             const TimingParams &timing, const Geometry &geometry,
                                                             const ChannelParams &channel);

}  // namespace serial

}  // namespace ionlattice
