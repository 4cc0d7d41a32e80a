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
#include <stdexcept>
#include <string>
#include <vector>

namespace ionlattice {

// Speed of light in vacuum, m/s.
inline constexpr double kSpeedOfLight = 299'792'458.0;

// Clock, gate, measurement and coherence durations. All times are seconds.
struct TimingParams {
    double tau = 10e-6;    // clock cycle
    double tau_a = 1e-6;   // single-qubit gate
    double tau_b = 10e-6;  // two-qubit gate
    double tau_d = 30e-6;  // qubit measurement
    std::optional<double> tau_m;  // memory-ion lifetime; stored, not used in any formula
    std::optional<double> tau_c;  // communication-ion lifetime; only checked against T
    double tau_D = 1.0;           // qubit decoherence time
    double refractive_index = 1.5;

    // The typical trapped-ion values: tau=10us, tau_a=1us, tau_b=10us, tau_d=30us, n=1.5.
    static TimingParams table2();

    bool operator==(const TimingParams &) const = default;
};

// Optical link efficiencies and excess noise.
struct ChannelParams {
    double eta_cc = 1.0;
    double eta_det = 1.0;
    double alpha_att = 0.2;  // dB/km
    double excess_noise_pd = 0.0;
    // Accepted and validated; the heralded-state model assumes perfect visibility.
    double visibility = 1.0;

    // Unit efficiencies, 0.2 dB/km fiber, no excess noise.
    static ChannelParams standard();

    bool operator==(const ChannelParams &) const = default;
};

struct Geometry {
    double inter_site_distance_km = 1e-9;  // 1 um
    int n_repeaters = 0;
    int bond_count = 16;
    int site_pair_factor = 32;

    bool operator==(const Geometry &) const = default;
};

struct Thresholds {
    double p_th = 0.855;
    double bond_fail_adaptive = 0.145;
    double bond_fail_nonadaptive = 0.065;
    double measurement_error = 0.029;
    double stabilizer_floor = 0.70;
    double ft_rhs = 0.30 / 76.8;

    // Sets p_th together with the adaptive bond-failure tolerance it implies.
    void set_p_th(double value);
    // Sets the stabilizer floor together with the right-hand side it implies.
    void set_stabilizer_floor(double value);

    bool operator==(const Thresholds &) const = default;
};

// Spatial degree M and temporal degree m. Analytics use the real m; simulation
// uses temporal_m_ceil().
struct MultiplexPlan {
    int spatial_M = 1;
    double temporal_m = 1.0;

    int temporal_m_ceil() const;

    bool operator==(const MultiplexPlan &) const = default;
};

struct ParamBundle {
    TimingParams timing = TimingParams::table2();
    ChannelParams channel = ChannelParams::standard();
    Geometry geometry;
    Thresholds thresholds;
    MultiplexPlan multiplex;

    bool operator==(const ParamBundle &) const = default;
};

struct Violation {
    std::string field;
    std::string message;
};

// Thrown by validate_or_throw; what() lists every violation.
class ValidationError : public std::invalid_argument {
   public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation> &violations() const { return violations_; }

   private:
    std::vector<Violation> violations_;
};

std::vector<Violation> validate(const TimingParams &timing);
std::vector<Violation> validate(const ChannelParams &channel);
std::vector<Violation> validate(const Geometry &geometry);
std::vector<Violation> validate(const Thresholds &thresholds);
std::vector<Violation> validate(const MultiplexPlan &plan);
std::vector<Violation> validate(const ParamBundle &bundle);

const ParamBundle &validate_or_throw(const ParamBundle &bundle);

// Named presets. Currently only "table2".
ParamBundle preset(const std::string &name);

}  // namespace ionlattice
