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
#include <stdexcept>

#include "ionlattice/params.h"

namespace ionlattice {

// Raised when the per-attempt success probability is too small for any finite
// number of attempts to reach the requested threshold.
class UnreachableThreshold : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// Success probability of one heralded attempt between two sites, with the
// factors that produced it.
struct HopSuccess {
    double p = 0;
    double distance_km = 0;
    double eta_cc = 1;
    double eta_trans = 1;
    double eta_det = 1;
};

struct RepeaterHopSuccess {
    double p0 = 0;        // end-to-end single attempt without repeaters
    double p0_prime = 0;  // single attempt over one of the n+1 segments
    int n_repeaters = 0;
};

// Fiber transmission 10^(-alpha L / 10).
double fiber_transmission(double alpha_db_per_km, double distance_km);

// p = 1/2 * eta_cc * eta_trans * eta_det. The 1/2 is the linear-optics
// Bell-measurement success probability.
HopSuccess attempt_success_probability(const ChannelParams &channel, double distance_km);

// 1 - (1 - p)^(m M), for real m > 0 and M >= 1.
double multiplexed_success(double p, double m, double M);

// 1 - (1 - p)^k for any real attempt count k >= 0.
double success_after_attempts(double p, double attempts);

// The attempt product M m = log(1 - p_th) / log(1 - p) needed to reach p_th.
// p = 1 returns 1; p below machine epsilon throws UnreachableThreshold.
double required_multiplex_product(double p, double p_th);

// Smallest integer k with success_after_attempts(p, k) >= p_th.
std::int64_t required_attempts_ceil(double p, double p_th);

// Round-trip optical heralding delay n L / c, in seconds.
double heralding_time(double distance_km, double refractive_index);

// Per-segment success with n repeaters evenly spaced over distance_km.
RepeaterHopSuccess per_hop_success_with_repeaters(const ChannelParams &channel, double distance_km, int n);

// The closed form 1/2 (2 p0)^(1/(n+1)); equals p0' only for unit
// efficiencies.
double per_hop_success_closed_form(double p0, int n);

// [1 - (1 - p0')^(m M')]^(n+1), swaps assumed deterministic.
double chain_success(double p0_prime, double m, double M_prime, int n);

// M' = log(1 - p_th^(1/(n+1))) / (m log(1 - p0')), the spatial degree that
// makes chain_success equal p_th.
double repeater_spatial_multiplex(double p0_prime, double m, double p_th, int n);

}  // namespace ionlattice
