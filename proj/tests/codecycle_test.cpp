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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ionlattice/codecycle.h"
#include "ionlattice/entanglement.h"

using namespace ionlattice;

TEST(CodeCycle, StageTimesAccumulate) {
    TimingParams t = TimingParams::table2();
    auto s = code_cycle_schedule(t, 4.0, 2e-6);
    double T = 4 * 10e-6 + 2e-6 + 3 * 10e-6;
    EXPECT_NEAR(s.T, T, 1e-18);
    EXPECT_NEAR(s.tau1, 5 * T, 1e-17);
    EXPECT_NEAR(s.tau2, 5 * T + 30e-6, 1e-17);
    EXPECT_NEAR(s.tau3, 10 * T + 30e-6, 1e-17);
    EXPECT_NEAR(s.tau4, 10 * T + 60e-6, 1e-17);
}

TEST(CodeCycle, Tau4IdentityRandomDraws) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.1, 10);
    for (int i = 0; i < 1000; ++i) {
        TimingParams t;
        t.tau = u(rng) * 1e-6;
        t.tau_b = u(rng) * 1e-6;
        t.tau_d = u(rng) * 1e-5;
        double m = u(rng) * 10;
        double tau_H = u(rng) * 1e-6;
        auto s = code_cycle_schedule(t, m, tau_H);
        EXPECT_NEAR(s.tau4, 10 * s.T + 2 * t.tau_d, 4e-16 * s.tau4);
    }
}

TEST(CodeCycle, WorkedExample) {
    // p = 0.5, M = 1, L = 1 um: m = log(0.145)/log(0.5), T = 10 us * m + 30 us + n L / c.
    double m = std::log(0.145) / std::log(0.5);
    double T = 10e-6 * m + 30e-6 + 1.5 * 1e-6 / 299792458.0;
    double tau4 = 10 * T + 60e-6;
    EXPECT_NEAR(tau4, 638.6e-6, 0.001 * 638.6e-6);
    auto s = code_cycle_from_probability(TimingParams::table2(), ChannelParams::standard(), 1e-9, 1, 0.855);
    EXPECT_NEAR(s.tau4, tau4, 1e-12);
    ASSERT_TRUE(s.M_used.has_value());
    EXPECT_EQ(*s.M_used, 1);
}

TEST(CodeCycle, LargerMShortensTheCycle) {
    auto t = TimingParams::table2();
    double prev = INFINITY;
    for (int M : {1, 5, 10, 20, 30, 50}) {
        double tau4 = code_cycle_for_probability(t, 1e-3, M, 0.855, 0).tau4;
        EXPECT_LT(tau4, prev);
        prev = tau4;
    }
}

TEST(CodeCycle, CommunicationLifetimeWarning) {
    TimingParams t = TimingParams::table2();
    EXPECT_FALSE(time_step_duration(t, 3, 0).warning);
    t.tau_c = 1e-6;
    EXPECT_TRUE(time_step_duration(t, 3, 0).warning);
    t.tau_c = 1.0;
    EXPECT_FALSE(time_step_duration(t, 3, 0).warning);
}

TEST(CodeCycle, ReuseWindow) {
    TimingParams t = TimingParams::table2();
    EXPECT_EQ(reuse_window(t), 3);
    // 3 * 0.7 / 0.1 is 21 up to rounding; must not become 22.
    t.tau_b = 0.7e-6;
    t.tau = 0.1e-6;
    EXPECT_EQ(reuse_window(t), 21);
    t.tau_b = 11e-6;
    t.tau = 10e-6;
    EXPECT_EQ(reuse_window(t), 4);
}

TEST(IonBudget, CommunicationPlateauAtMj) {
    auto t = TimingParams::table2();
    Geometry g;
    const int j = reuse_window(t);
    for (int M : {1, 5, 10, 20, 30, 50}) {
        for (double p = 1e-4; p < 0.5; p *= 1.3) {
            auto b = ion_budget_without_repeaters(p, M, 0.855, t, g);
            if (b.m >= j) {
                EXPECT_EQ(b.communication_ions_exact, 32.0 * M * j);
                EXPECT_EQ(b.communication_ions, 32 * M * j);
            } else {
                EXPECT_NEAR(b.communication_ions_exact, 32.0 * M * b.m, 1e-9);
            }
        }
    }
}

TEST(IonBudget, MemoryDependsOnlyOnTheProduct) {
    auto t = TimingParams::table2();
    Geometry g;
    for (double p : {1e-4, 1e-3, 0.01, 0.2}) {
        double ref = ion_budget_without_repeaters(p, 1, 0.855, t, g).memory_ions_exact;
        EXPECT_NEAR(ref, 32 * required_multiplex_product(p, 0.855), 1e-9 * ref);
        for (int M = 2; M <= 300; M += 37) {
            EXPECT_NEAR(ion_budget_without_repeaters(p, M, 0.855, t, g).memory_ions_exact, ref, 1e-9 * ref);
        }
    }
}

TEST(IonBudget, PlanCounts) {
    auto b = ion_budget_from_plan(2, 5, TimingParams::table2(), Geometry{});
    EXPECT_EQ(b.memory_ions, 320);
    EXPECT_EQ(b.communication_ions, 192);
    EXPECT_EQ(b.reuse_window_j, 3);
    EXPECT_THROW(ion_budget_from_plan(0, 5, TimingParams::table2(), Geometry{}), std::invalid_argument);
}

TEST(IonBudget, ZeroRepeatersMatchesDirect) {
    auto c = ChannelParams::standard();
    auto t = TimingParams::table2();
    double p = attempt_success_probability(c, 80).p;
    auto with0 = ion_budget_with_repeaters(c, 80, 0, 1, 0.855, t, Geometry{});
    auto direct = ion_budget_without_repeaters(p, 1, 0.855, t, Geometry{});
    EXPECT_NEAR(with0.memory_ions_exact, direct.memory_ions_exact, 1e-9 * direct.memory_ions_exact);
    EXPECT_FALSE(with0.with_repeaters);
}

TEST(Repeaters, HandDerivedPoint) {
    auto c = ChannelParams::standard();
    auto t = TimingParams::table2();
    auto r = ion_budget_with_repeaters(c, 200, 3, 1, 0.855, t, Geometry{});
    // 32 * 4 * log(1 - 0.855^(1/4)) / log(0.95) and 32 * log(0.145) / log(1 - 0.5e-4).
    double NR = 128 * std::log(1 - std::pow(0.855, 0.25)) / std::log(0.95);
    double NWR = 32 * std::log(0.145) / std::log1p(-0.5e-4);
    EXPECT_NEAR(r.memory_ions_exact, NR, 1e-9 * NR);
    EXPECT_NEAR(NR, 8133, 0.01 * 8133);
    EXPECT_NEAR(NWR, 1.236e6, 0.01 * 1.236e6);
    auto w = ion_budget_with_repeaters(c, 200, 0, 1, 0.855, t, Geometry{});
    EXPECT_NEAR(w.memory_ions_exact, NWR, 1e-9 * NWR);
}

TEST(Repeaters, CrossoverOnDefaultGrid) {
    RepeaterComparisonSpec spec;
    spec.distances_km = default_distance_grid();
    spec.repeater_counts = {1, 2, 3, 4};
    ASSERT_EQ(spec.distances_km.size(), 20u);
    EXPECT_EQ(spec.distances_km.front(), 10);
    EXPECT_EQ(spec.distances_km.back(), 200);
    auto rows = repeater_comparison_table(spec, TimingParams::table2(), Geometry{}, ChannelParams::standard());
    ASSERT_EQ(rows.size(), 80u);
    for (const auto &r : rows) {
        if (r.distance_km == 10) {
            EXPECT_GT(r.memory_with, r.memory_without) << r.n_repeaters;
        }
        if (r.distance_km == 200) {
            EXPECT_LT(r.memory_with, r.memory_without) << r.n_repeaters;
        }
    }
}

TEST(Repeaters, ParallelMatchesSerial) {
    RepeaterComparisonSpec spec;
    spec.distances_km = default_distance_grid();
    spec.repeater_counts = {1, 2, 3, 4, 7};
    spec.m = 50;
    auto a = repeater_comparison_table(spec, TimingParams::table2(), Geometry{}, ChannelParams::standard());
    auto b = serial::repeater_comparison_table(spec, TimingParams::table2(), Geometry{}, ChannelParams::standard());
    ASSERT_EQ(a.size(), b.size());
    for (size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].distance_km, b[k].distance_km);
        EXPECT_EQ(a[k].n_repeaters, b[k].n_repeaters);
        EXPECT_EQ(a[k].memory_with, b[k].memory_with);
        EXPECT_EQ(a[k].communication_with, b[k].communication_with);
    }
    spec.distances_km.clear();
    EXPECT_THROW(repeater_comparison_table(spec, TimingParams::table2(), Geometry{}, ChannelParams::standard()),
                 std::invalid_argument);
}
