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

#include <array>
#include <cstdint>
#include <vector>

#include "ionlattice/params.h"

namespace ionlattice {

// Philox4x32 with 10 rounds: a counter-based generator, so any (key, counter)
// block can be produced without touching the others.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

// Uniform stream for one (seed, trial, hop) triple.
class PhiloxStream {
   public:
    PhiloxStream(std::uint64_t seed, std::uint64_t trial, std::uint32_t hop);

    std::uint32_t next_u32();
    // Uniform on [0, 1) with 53 random bits.
    double next_double();
    bool bernoulli(double p) { return next_double() < p; }

   private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> block_{};
    int used_ = 4;
};

struct TrialConfig {
    double p = 0.5;  // per-attempt success; p0' for chains
    int m = 1;
    int M = 1;
    int n_repeaters = 0;
    int bond_count = 16;
    std::int64_t trials = 10000;
    std::uint64_t seed = 1;
};

// Throws std::invalid_argument on out-of-range fields.
void validate_trial_config(const TrialConfig &cfg);

struct EstimateWithCI {
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::int64_t successes = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double analytic_reference = 0;
    double z_score = 0;
};

// 95% Wilson score interval.
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials, double z = 1.959963984540054);

// (p_hat - ref) / sqrt(ref (1 - ref) / trials); 0 or +-inf at a degenerate reference.
double binomial_z_score(double p_hat, double reference, std::int64_t trials);

EstimateWithCI make_estimate(std::int64_t successes, std::int64_t trials, std::uint64_t seed, double reference);

// Each trial makes m M Bernoulli(p) attempts; success if any succeeds.
EstimateWithCI simulate_bond(const TrialConfig &cfg);

// n+1 independent hops, each a bond experiment with (p, m, M); all must succeed.
EstimateWithCI simulate_chain(const TrialConfig &cfg);

struct TwoLayerStats {
    std::vector<std::int64_t> failure_histogram;  // index = failed bonds in a trial
    double mean_failures = 0;
    double analytic_mean_failures = 0;
    EstimateWithCI per_bond_failure;  // pooled over all bonds of all trials
    // Trials whose failed fraction exceeds the adaptive tolerance, against the
    // binomial tail.
    EstimateWithCI above_tolerance;
    double bond_success = 0;
};

TwoLayerStats simulate_two_layer(const TrialConfig &cfg, const Thresholds &thresholds);

// P(X / n > threshold) for X ~ Binomial(n, q).
double binomial_tail_above(int n, double q, double threshold);

namespace serial {
EstimateWithCI simulate_bond(const TrialConfig &cfg);
EstimateWithCI simulate_chain(const TrialConfig &cfg);
TwoLayerStats simulate_two_layer(const TrialConfig &cfg, const Thresholds &thresholds);
}  // namespace serial

}  // namespace ionlattice
