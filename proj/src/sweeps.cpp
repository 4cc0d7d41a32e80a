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

#include "ionlattice/sweeps.h"

#include <cmath>
#include <stdexcept>

#include "ionlattice/entanglement.h"

namespace ionlattice {

std::vector<double> logspace(double lo, double hi, int count) {
    if (!(lo > 0) || !(hi > lo) || count < 2) {
        throw std::invalid_argument("logspace needs 0 < lo < hi and count >= 2");
    }
    std::vector<double> v(count);
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int k = 0; k < count; ++k) {
        v[k] = std::pow(10.0, a + (b - a) * k / (count - 1));
    }
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<int> integer_linspace(int lo, int hi, int count) {
    std::vector<int> v;
    for (int k = 0; k < count; ++k) {
        int x = static_cast<int>(std::lround(lo + static_cast<double>(hi - lo) * k / (count - 1)));
        if (v.empty() || v.back() != x) {
            v.push_back(x);
        }
    }
    return v;
}

const std::vector<std::string> &sweep_tags() {
    static const std::vector<std::string> tags{"fig6",  "fig9",  "fig10", "fig11", "fig13",
                                               "fig14", "ft15", "ft16",  "ft17"};
    return tags;
}

namespace {

const std::vector<int> kFigureM{1, 5, 10, 20, 30, 50};
const std::vector<int> kRepeaterCounts{1, 2, 3, 4};

Table fig6(const ParamBundle &b) {
    Table t{{"p", "m", "M_required"}, {}};
    for (int m : {1, 2, 5, 10, 20}) {
        for (double p : logspace(1e-4, 0.5, 100)) {
            t.add_row({p, std::int64_t{m}, required_multiplex_product(p, b.thresholds.p_th) / m});
        }
    }
    return t;
}

double tau_H_of(const ParamBundle &b) {
    return heralding_time(b.geometry.inter_site_distance_km, b.timing.refractive_index);
}

Table fig9(const ParamBundle &b) {
    Table t{{"p", "M", "m", "T_s", "tau4_s"}, {}};
    const double tau_H = tau_H_of(b);
    for (int M : kFigureM) {
        for (double p : logspace(1e-4, 1e-1, 100)) {
            auto s = code_cycle_for_probability(b.timing, p, M, b.thresholds.p_th, tau_H);
            t.add_row({p, std::int64_t{M}, s.m_used, s.T, s.tau4});
        }
    }
    return t;
}

Table fig10(const ParamBundle &b) {
    Table t{{"p", "M", "m", "communication_ions", "communication_ions_ceil"}, {}};
    for (int M : kFigureM) {
        for (double p : logspace(1e-4, 1e-1, 100)) {
            auto ions = ion_budget_without_repeaters(p, M, b.thresholds.p_th, b.timing, b.geometry);
            t.add_row({p, std::int64_t{M}, ions.m, ions.communication_ions_exact, ions.communication_ions});
        }
    }
    return t;
}

Table fig11(const ParamBundle &b) {
    Table t{{"M", "p", "m", "tau4_s", "communication_ions"}, {}};
    const double tau_H = tau_H_of(b);
    for (int M : integer_linspace(1, 300, 20)) {
        for (double p : logspace(1e-4, 1e-1, 20)) {
            auto s = code_cycle_for_probability(b.timing, p, M, b.thresholds.p_th, tau_H);
            auto ions = ion_budget_without_repeaters(p, M, b.thresholds.p_th, b.timing, b.geometry);
            t.add_row({std::int64_t{M}, p, s.m_used, s.tau4, ions.communication_ions_exact});
        }
    }
    return t;
}

std::vector<RepeaterComparisonRow> repeater_rows(const ParamBundle &b, double m) {
    RepeaterComparisonSpec spec;
    spec.distances_km = default_distance_grid();
    spec.repeater_counts = kRepeaterCounts;
    spec.m = m;
    spec.p_th = b.thresholds.p_th;
    return repeater_comparison_table(spec, b.timing, b.geometry, b.channel);
}

Table fig13(const ParamBundle &b) {
    Table t{{"L_km", "n", "N_mem_WR", "N_mem_R"}, {}};
    for (const auto &r : repeater_rows(b, 50)) {
        t.add_row({r.distance_km, std::int64_t{r.n_repeaters}, r.memory_without, r.memory_with});
    }
    return t;
}

Table fig14(const ParamBundle &b) {
    Table t{{"L_km", "n", "N_comm_WR", "N_comm_R"}, {}};
    for (const auto &r : repeater_rows(b, 50)) {
        t.add_row({r.distance_km, std::int64_t{r.n_repeaters}, r.communication_without, r.communication_with});
    }
    return t;
}

}  // namespace

Table feasibility_table(const FeasibilityGrid &g) {
    Table t{{std::string(axis_name(g.spec.x.axis)), std::string(axis_name(g.spec.y.axis)), "lhs", "satisfied"}, {}};
    for (size_t i = 0; i < g.xs.size(); ++i) {
        for (size_t j = 0; j < g.ys.size(); ++j) {
            const auto &c = g.at(i, j);
            t.add_row({g.xs[i], g.ys[j], c.lhs, c.satisfied});
        }
    }
    return t;
}

Table boundary_table(const FeasibilityGrid &g) {
    Table t{{std::string(axis_name(g.spec.x.axis)), std::string(axis_name(g.spec.y.axis))}, {}};
    for (const auto &p : g.boundary) {
        t.add_row({p.x, p.y});
    }
    return t;
}

Table repeater_table(const std::vector<RepeaterComparisonRow> &rows) {
    Table t{{"L_km", "n", "N_mem_WR", "N_mem_R", "N_comm_WR", "N_comm_R"}, {}};
    for (const auto &r : rows) {
        t.add_row({r.distance_km, std::int64_t{r.n_repeaters}, r.memory_without, r.memory_with,
                   r.communication_without, r.communication_with});
    }
    return t;
}

Table sweep_table(std::string_view tag, const ParamBundle &bundle) {
    if (tag == "fig6") {
        return fig6(bundle);
    }
    if (tag == "fig9") {
        return fig9(bundle);
    }
    if (tag == "fig10") {
        return fig10(bundle);
    }
    if (tag == "fig11") {
        return fig11(bundle);
    }
    if (tag == "fig13") {
        return fig13(bundle);
    }
    if (tag == "fig14") {
        return fig14(bundle);
    }
    if (tag == "ft15" || tag == "ft16" || tag == "ft17") {
        return feasibility_table(feasibility_grid(figure_grid_spec(tag), bundle.thresholds));
    }
    throw std::invalid_argument("unknown sweep '" + std::string(tag) + "'");
}

Table estimate_table(const ParamBundle &b, std::optional<double> p_override) {
    const double L = b.geometry.inter_site_distance_km;
    const double p = p_override ? *p_override : attempt_success_probability(b.channel, L).p;
    const int M = b.multiplex.spatial_M;
    const double tau_H = heralding_time(L, b.timing.refractive_index);
    auto s = code_cycle_for_probability(b.timing, p, M, b.thresholds.p_th, tau_H);
    auto ions = ion_budget_without_repeaters(p, M, b.thresholds.p_th, b.timing, b.geometry);
    Table t{{"p", "M", "strategy", "m", "T_s", "tau1_s", "tau2_s", "tau3_s", "tau4_s", "memory_ions",
             "communication_ions", "memory_ions_exact", "communication_ions_exact", "reuse_window_j"},
            {}};
    t.add_row({p, std::int64_t{M}, std::string(M == 1 ? "repeat until success" : "spatial multiplexing"), s.m_used,
               s.T, s.tau1, s.tau2, s.tau3, s.tau4, ions.memory_ions, ions.communication_ions,
               ions.memory_ions_exact, ions.communication_ions_exact, std::int64_t{ions.reuse_window_j}});
    return t;
}

}  // namespace ionlattice
