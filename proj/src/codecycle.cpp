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

#include "ionlattice/codecycle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ionlattice/entanglement.h"
#include "ionlattice/parallel.h"
#include "ionlattice/report.h"

namespace ionlattice {

namespace {

std::int64_t ceil_count(double x) {
    // Analytic counts like 32 * 3 must not round up because of the last ulp.
    double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
        return static_cast<std::int64_t>(nearest);
    }
    return static_cast<std::int64_t>(std::ceil(x));
}

void check_m(double m) {
    if (!(m > 0)) {
        throw std::invalid_argument("temporal multiplexing m must be > 0");
    }
}

}  // namespace

TimeStep time_step_duration(const TimingParams &timing, double m, double tau_H) {
    check_m(m);
    TimeStep step;
    step.seconds = m * timing.tau + tau_H + 3.0 * timing.tau_b;
    if (timing.tau_c && *timing.tau_c <= step.seconds) {
        step.warning = "communication-ion lifetime tau_c = " + format_number(*timing.tau_c) +
                       " s does not exceed the time step T = " + format_number(step.seconds) + " s";
    }
    return step;
}

CodeCycleSchedule code_cycle_schedule(const TimingParams &timing, double m, double tau_H) {
    CodeCycleSchedule s;
    s.T = time_step_duration(timing, m, tau_H).seconds;
    s.tau1 = 5.0 * s.T;
    s.tau2 = s.tau1 + timing.tau_d;
    s.tau3 = s.tau2 + 5.0 * s.T;
    s.tau4 = s.tau3 + timing.tau_d;
    s.m_used = m;
    return s;
}

CodeCycleSchedule code_cycle_for_probability(const TimingParams &timing, double p, int M, double p_th, double tau_H) {
    if (M < 1) {
        throw std::invalid_argument("M must be >= 1");
    }
    double m = required_multiplex_product(p, p_th) / M;
    auto s = code_cycle_schedule(timing, m, tau_H);
    s.M_used = M;
    return s;
}

CodeCycleSchedule code_cycle_from_probability(const TimingParams &timing, const ChannelParams &channel,
                                              double distance_km, int M, double p_th) {
    double p = attempt_success_probability(channel, distance_km).p;
    double tau_H = heralding_time(distance_km, timing.refractive_index);
    return code_cycle_for_probability(timing, p, M, p_th, tau_H);
}

int reuse_window(const TimingParams &timing) {
    if (!(timing.tau > 0) || !(timing.tau_b > 0)) {
        throw std::invalid_argument("tau and tau_b must be > 0");
    }
    return static_cast<int>(ceil_count(3.0 * timing.tau_b / timing.tau));
}

IonBudget ion_budget_from_plan(double M, double m, const TimingParams &timing, const Geometry &geometry) {
    check_m(m);
    if (!(M > 0)) {
        throw std::invalid_argument("spatial multiplexing M must be > 0");
    }
    IonBudget b;
    b.reuse_window_j = reuse_window(timing);
    b.m = m;
    b.M = M;
    double pairs = geometry.site_pair_factor;
    b.memory_ions_exact = pairs * M * m;
    b.communication_ions_exact = pairs * M * std::min(static_cast<double>(b.reuse_window_j), m);
    b.memory_ions = ceil_count(b.memory_ions_exact);
    b.communication_ions = ceil_count(b.communication_ions_exact);
    return b;
}

IonBudget ion_budget_without_repeaters(double p, int M, double p_th, const TimingParams &timing,
                                       const Geometry &geometry) {
    if (M < 1) {
        throw std::invalid_argument("M must be >= 1");
    }
    double m = required_multiplex_product(p, p_th) / M;
    return ion_budget_from_plan(M, m, timing, geometry);
}

IonBudget ion_budget_with_repeaters(const ChannelParams &channel, double distance_km, int n, double m, double p_th,
                                    const TimingParams &timing, const Geometry &geometry) {
    check_m(m);
    auto hop = per_hop_success_with_repeaters(channel, distance_km, n);
    double M_prime = repeater_spatial_multiplex(hop.p0_prime, m, p_th, n);
    IonBudget b = ion_budget_from_plan(M_prime, m, timing, geometry);
    b.memory_ions_exact *= (n + 1);
    b.communication_ions_exact *= (n + 1);
    b.memory_ions = ceil_count(b.memory_ions_exact);
    b.communication_ions = ceil_count(b.communication_ions_exact);
    b.with_repeaters = n > 0;
    b.n_repeaters = n;
    return b;
}

std::vector<double> default_distance_grid(double max_km, int count) {
    if (count < 1 || !(max_km > 0)) {
        throw std::invalid_argument("distance grid needs count >= 1 and max > 0");
    }
    std::vector<double> grid(count);
    for (int k = 0; k < count; ++k) {
        grid[k] = max_km * (k + 1) / count;
    }
    return grid;
}

namespace {

RepeaterComparisonRow comparison_row(const RepeaterComparisonSpec &spec, double L, int n, const TimingParams &timing,
                                     const Geometry &geometry, const ChannelParams &channel) {
    RepeaterComparisonRow row;
    row.distance_km = L;
    row.n_repeaters = n;
    auto without = ion_budget_with_repeaters(channel, L, 0, spec.m, spec.p_th, timing, geometry);
    auto with = ion_budget_with_repeaters(channel, L, n, spec.m, spec.p_th, timing, geometry);
    row.memory_without = without.memory_ions_exact;
    row.memory_with = with.memory_ions_exact;
    row.communication_without = without.communication_ions_exact;
    row.communication_with = with.communication_ions_exact;
    return row;
}

void check_spec(const RepeaterComparisonSpec &spec) {
    if (spec.distances_km.empty() || spec.repeater_counts.empty()) {
        throw std::invalid_argument("repeater comparison needs non-empty distance and repeater grids");
    }
}

}  // namespace

std::vector<RepeaterComparisonRow> repeater_comparison_table(const RepeaterComparisonSpec &spec,
                                                             const TimingParams &timing, const Geometry &geometry,
                                                             const ChannelParams &channel) {
    check_spec(spec);
    const auto nd = static_cast<std::int64_t>(spec.distances_km.size());
    const auto nn = static_cast<std::int64_t>(spec.repeater_counts.size());
    std::vector<RepeaterComparisonRow> rows(nd * nn);
    parallel_for(nd * nn, [&](std::int64_t k) {
        rows[k] = comparison_row(spec, spec.distances_km[k / nn], spec.repeater_counts[k % nn], timing, geometry,
                                 channel);
    });
    return rows;
}

namespace serial {

std::vector<RepeaterComparisonRow> repeater_comparison_table(const RepeaterComparisonSpec &spec,
                                                             const TimingParams &timing, const Geometry &geometry,
                                                             const ChannelParams &channel) {
    check_spec(spec);
    std::vector<RepeaterComparisonRow> rows;
    for (double L : spec.distances_km) {
        for (int n : spec.repeater_counts) {
            rows.push_back(comparison_row(spec, L, n, timing, geometry, channel));
        }
    }
    return rows;
}

}  // namespace serial

}  // namespace ionlattice
