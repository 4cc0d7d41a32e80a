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

#include <random>

#include "ionlattice/config.h"
#include "ionlattice/params.h"

using namespace ionlattice;

namespace {

bool has_violation(const std::vector<Violation> &v, const std::string &field, const std::string &message) {
    for (const auto &x : v) {
        if (x.field == field && x.message == message) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST(Params, Table2Preset) {
    auto b = preset("table2");
    EXPECT_DOUBLE_EQ(b.timing.tau, 10e-6);
    EXPECT_DOUBLE_EQ(b.timing.tau_a, 1e-6);
    EXPECT_DOUBLE_EQ(b.timing.tau_b, 10e-6);
    EXPECT_DOUBLE_EQ(b.timing.tau_d, 30e-6);
    EXPECT_DOUBLE_EQ(b.timing.refractive_index, 1.5);
    EXPECT_DOUBLE_EQ(b.channel.alpha_att, 0.2);
    EXPECT_DOUBLE_EQ(b.thresholds.p_th, 0.855);
    EXPECT_TRUE(validate(b).empty());
    EXPECT_THROW(preset("nope"), std::invalid_argument);
}

TEST(Params, ZeroEfficiencyRejected) {
    ChannelParams c;
    c.eta_cc = 0;
    EXPECT_TRUE(has_violation(validate(c), "channel.eta_cc", "efficiency must be > 0"));
}

TEST(Params, ExcessNoiseMustBeBelowOne) {
    ChannelParams c;
    c.excess_noise_pd = 1.0;
    EXPECT_TRUE(has_violation(validate(c), "channel.excess_noise_pd", "P_d must be < 1"));
}

TEST(Params, AllViolationsReported) {
    ParamBundle b;
    b.timing.tau = -1;
    b.channel.eta_det = 2;
    b.multiplex.spatial_M = 0;
    try {
        validate_or_throw(b);
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.violations().size(), 3u);
        EXPECT_NE(std::string(e.what()).find("timing.tau"), std::string::npos);
    }
}

TEST(Params, PairedThresholdFieldsStayConsistent) {
    Thresholds t;
    t.set_p_th(0.9);
    EXPECT_TRUE(validate(t).empty());
    EXPECT_NEAR(t.bond_fail_adaptive, 0.1, 1e-15);
    t.p_th = 0.8;
    EXPECT_FALSE(validate(t).empty());
    t.set_stabilizer_floor(0.8);
    t.set_p_th(0.8);
    EXPECT_TRUE(validate(t).empty());
}

TEST(Config, MicrosecondKeysConvert) {
    auto b = parse_config_text("[timing]\ntau_b_us = 10\ntau_us = 2.5\n");
    EXPECT_EQ(b.timing.tau_b, 1e-5);
    EXPECT_EQ(b.timing.tau, 2.5e-6);
    ParamBundle c;
    apply_setting(c, "timing.tau_d_s", "3e-5");
    EXPECT_EQ(c.timing.tau_d, 3e-5);
}

TEST(Config, UnknownKeyAndBadNumber) {
    ParamBundle b;
    EXPECT_THROW(apply_setting(b, "timing.tau_ms", "1"), std::invalid_argument);
    EXPECT_THROW(apply_setting(b, "channel.eta_cc", "abc"), std::invalid_argument);
    EXPECT_THROW(apply_setting(b, "multiplex.M", "2.5"), std::invalid_argument);
}

TEST(Config, EveryListedKeyIsAccepted) {
    for (const auto &k : config_keys()) {
        ParamBundle b;
        EXPECT_NO_THROW(apply_setting(b, k.name, "1")) << k.name;
    }
}

TEST(Config, SerializeRoundTripRandom) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int trial = 0; trial < 200; ++trial) {
        ParamBundle b;
        b.timing.tau = u(rng) * 1e-5;
        b.timing.tau_b = u(rng) * 1e-4;
        b.timing.tau_D = u(rng);
        if (trial % 2) {
            b.timing.tau_c = u(rng);
            b.timing.tau_m = u(rng) * 3;
        }
        b.channel.eta_cc = u(rng);
        b.channel.excess_noise_pd = u(rng) / 2;
        b.geometry.inter_site_distance_km = u(rng) * 200;
        b.geometry.n_repeaters = trial % 5;
        b.thresholds.set_p_th(u(rng));
        b.thresholds.set_stabilizer_floor(u(rng));
        b.multiplex.spatial_M = 1 + trial;
        b.multiplex.temporal_m = u(rng) * 50;
        EXPECT_EQ(parse_config_text(serialize_config(b)), b) << serialize_config(b);
    }
}
