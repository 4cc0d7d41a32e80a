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

#include "ionlattice/entanglement.h"

#include <cmath>
#include <limits>
#include <string>

namespace ionlattice {

namespace {

void check_probability(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " + std::to_string(p));
    }
}

void check_threshold(double p_th) {
    if (!(p_th > 0 && p_th < 1)) {
        throw std::invalid_argument("p_th must be in (0, 1), got " + std::to_string(p_th));
    }
}

// log(1 - p) with the degenerate endpoints rejected by the callers.
double log_miss(double p) {
    return std::log1p(-p);
}

}  // namespace

double fiber_transmission(double alpha_db_per_km, double distance_km) {
    return std::pow(10.0, -(alpha_db_per_km / 10.0) * distance_km);
}

HopSuccess attempt_success_probability(const ChannelParams &channel, double distance_km) {
    if (!(distance_km >= 0)) {
        throw std::invalid_argument("distance must be >= 0");
    }
    HopSuccess h;
    h.distance_km = distance_km;
    h.eta_cc = channel.eta_cc;
    h.eta_det = channel.eta_det;
    h.eta_trans = fiber_transmission(channel.alpha_att, distance_km);
    h.p = 0.5 * h.eta_cc * h.eta_trans * h.eta_det;
    return h;
}

double success_after_attempts(double p, double attempts) {
    check_probability(p, "p");
    if (!(attempts >= 0)) {
        throw std::invalid_argument("attempt count must be >= 0");
    }
    if (attempts == 0) {
        return 0;
    }
    if (p == 1) {
        return 1;
    }
    return -std::expm1(attempts * log_miss(p));
}

double multiplexed_success(double p, double m, double M) {
    if (!(m > 0)) {
        throw std::invalid_argument("m must be > 0");
    }
    if (!(M >= 1)) {
        throw std::invalid_argument("M must be >= 1");
    }
    return success_after_attempts(p, m * M);
}

double required_multiplex_product(double p, double p_th) {
    check_probability(p, "p");
    check_threshold(p_th);
    if (p == 1) {
        return 1;
    }
    if (p < std::numeric_limits<double>::epsilon()) {
        throw UnreachableThreshold("unreachable threshold: attempt success probability " + std::to_string(p) +
                                   " is below machine epsilon");
    }
    return log_miss(p_th) / log_miss(p);
}

std::int64_t required_attempts_ceil(double p, double p_th) {
    double x = required_multiplex_product(p, p_th);
    auto k = static_cast<std::int64_t>(std::ceil(x));
    k = std::max<std::int64_t>(k, 1);
    // The analytic ceiling can be off by one when x sits within rounding of an integer.
    while (k > 1 && success_after_attempts(p, static_cast<double>(k - 1)) >= p_th) {
        --k;
    }
    while (success_after_attempts(p, static_cast<double>(k)) < p_th) {
        ++k;
    }
    return k;
}

double heralding_time(double distance_km, double refractive_index) {
    if (!(distance_km >= 0)) {
        throw std::invalid_argument("distance must be >= 0");
    }
    return refractive_index * distance_km * 1000.0 / kSpeedOfLight;
}

RepeaterHopSuccess per_hop_success_with_repeaters(const ChannelParams &channel, double distance_km, int n) {
    if (n < 0) {
        throw std::invalid_argument("repeater count must be >= 0");
    }
    RepeaterHopSuccess r;
    r.n_repeaters = n;
    r.p0 = attempt_success_probability(channel, distance_km).p;
    r.p0_prime = n == 0 ? r.p0 : attempt_success_probability(channel, distance_km / (n + 1)).p;
    return r;
}

double per_hop_success_closed_form(double p0, int n) {
    return 0.5 * std::pow(2.0 * p0, 1.0 / (n + 1));
}

double chain_success(double p0_prime, double m, double M_prime, int n) {
    if (n < 0) {
        throw std::invalid_argument("repeater count must be >= 0");
    }
    if (!(m > 0) || !(M_prime > 0)) {
        throw std::invalid_argument("m and M' must be > 0");
    }
    double hop = success_after_attempts(p0_prime, m * M_prime);
    return std::pow(hop, n + 1);
}

double repeater_spatial_multiplex(double p0_prime, double m, double p_th, int n) {
    if (n < 0) {
        throw std::invalid_argument("repeater count must be >= 0");
    }
    if (!(m > 0)) {
        throw std::invalid_argument("m must be > 0");
    }
    double per_hop_target = std::pow(p_th, 1.0 / (n + 1));
    return required_multiplex_product(p0_prime, per_hop_target) / m;
}

}  // namespace ionlattice
