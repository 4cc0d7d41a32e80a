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

#include "ionlattice/params.h"

#include <cmath>
#include <sstream>

namespace ionlattice {

TimingParams TimingParams::table2() {
    TimingParams t;
    t.tau = 10e-6;
    t.tau_a = 1e-6;
    t.tau_b = 10e-6;
    t.tau_d = 30e-6;
    t.refractive_index = 1.5;
    return t;
}

ChannelParams ChannelParams::standard() {
    return ChannelParams{};
}

void Thresholds::set_p_th(double value) {
    p_th = value;
    bond_fail_adaptive = 1.0 - value;
}

void Thresholds::set_stabilizer_floor(double value) {
    stabilizer_floor = value;
    ft_rhs = (1.0 - value) * 15.0 / 1152.0;
}

int MultiplexPlan::temporal_m_ceil() const {
    return static_cast<int>(std::ceil(temporal_m));
}

namespace {

std::string describe(const std::vector<Violation> &violations) {
    std::ostringstream out;
    out << "invalid parameters:";
    for (const auto &v : violations) {
        out << "\n  " << v.field << ": " << v.message;
    }
    return out.str();
}

void require(std::vector<Violation> &out, bool ok, const char *field, const char *message) {
    if (!ok) {
        out.push_back({field, message});
    }
}

void append(std::vector<Violation> &out, std::vector<Violation> more) {
    out.insert(out.end(), more.begin(), more.end());
}

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {
}

std::vector<Violation> validate(const TimingParams &t) {
    std::vector<Violation> v;
    require(v, t.tau > 0, "timing.tau", "duration must be > 0");
    require(v, t.tau_a > 0, "timing.tau_a", "duration must be > 0");
    require(v, t.tau_b > 0, "timing.tau_b", "duration must be > 0");
    require(v, t.tau_d > 0, "timing.tau_d", "duration must be > 0");
    require(v, !t.tau_m || *t.tau_m > 0, "timing.tau_m", "duration must be > 0");
    require(v, !t.tau_c || *t.tau_c > 0, "timing.tau_c", "duration must be > 0");
    require(v, t.tau_D > 0, "timing.tau_D", "duration must be > 0");
    require(v, t.refractive_index >= 1, "timing.refractive_index", "refractive index must be >= 1");
    return v;
}

std::vector<Violation> validate(const ChannelParams &c) {
    std::vector<Violation> v;
    require(v, c.eta_cc > 0, "channel.eta_cc", "efficiency must be > 0");
    require(v, c.eta_cc <= 1, "channel.eta_cc", "efficiency must be <= 1");
    require(v, c.eta_det > 0, "channel.eta_det", "efficiency must be > 0");
    require(v, c.eta_det <= 1, "channel.eta_det", "efficiency must be <= 1");
    require(v, c.alpha_att >= 0, "channel.alpha_att", "attenuation must be >= 0");
    require(v, c.excess_noise_pd >= 0, "channel.excess_noise_pd", "P_d must be >= 0");
    require(v, c.excess_noise_pd < 1, "channel.excess_noise_pd", "P_d must be < 1");
    require(v, c.visibility >= 0 && c.visibility <= 1, "channel.visibility", "visibility must be in [0, 1]");
    return v;
}

std::vector<Violation> validate(const Geometry &g) {
    std::vector<Violation> v;
    require(v, g.inter_site_distance_km >= 0, "geometry.distance_km", "distance must be >= 0");
    require(v, g.n_repeaters >= 0, "geometry.n_repeaters", "repeater count must be >= 0");
    require(v, g.bond_count >= 1, "geometry.bond_count", "bond count must be >= 1");
    require(v, g.site_pair_factor == 2 * g.bond_count, "geometry.site_pair_factor",
            "site pair factor must equal 2 * bond_count");
    return v;
}

std::vector<Violation> validate(const Thresholds &t) {
    std::vector<Violation> v;
    require(v, t.p_th > 0 && t.p_th < 1, "thresholds.p_th", "p_th must be in (0, 1)");
    require(v, close(t.p_th, 1.0 - t.bond_fail_adaptive), "thresholds.bond_fail_adaptive",
            "must equal 1 - p_th");
    require(v, t.bond_fail_nonadaptive > 0 && t.bond_fail_nonadaptive < 1, "thresholds.bond_fail_nonadaptive",
            "must be in (0, 1)");
    require(v, t.measurement_error > 0 && t.measurement_error < 1, "thresholds.measurement_error",
            "must be in (0, 1)");
    require(v, t.stabilizer_floor > 0 && t.stabilizer_floor <= 1, "thresholds.stabilizer_floor",
            "must be in (0, 1]");
    require(v, close(t.ft_rhs, (1.0 - t.stabilizer_floor) * 15.0 / 1152.0), "thresholds.ft_rhs",
            "must equal (1 - stabilizer_floor) / (1152/15)");
    return v;
}

std::vector<Violation> validate(const MultiplexPlan &p) {
    std::vector<Violation> v;
    require(v, p.spatial_M >= 1, "multiplex.M", "M must be >= 1");
    require(v, p.temporal_m > 0, "multiplex.m", "m must be > 0");
    return v;
}

std::vector<Violation> validate(const ParamBundle &b) {
    std::vector<Violation> v;
    append(v, validate(b.timing));
    append(v, validate(b.channel));
    append(v, validate(b.geometry));
    append(v, validate(b.thresholds));
    append(v, validate(b.multiplex));
    return v;
}

const ParamBundle &validate_or_throw(const ParamBundle &bundle) {
    auto v = validate(bundle);
    if (!v.empty()) {
        throw ValidationError(std::move(v));
    }
    return bundle;
}

ParamBundle preset(const std::string &name) {
    if (name == "table2") {
        return ParamBundle{};
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace ionlattice
