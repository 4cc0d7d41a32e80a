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

#include "ionlattice/montecarlo.h"

#include <boost/math/distributions/binomial.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ionlattice/entanglement.h"
#include "ionlattice/parallel.h"

namespace ionlattice {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &lo, std::uint32_t &hi) {
    std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(prod);
    hi = static_cast<std::uint32_t>(prod >> 32);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> c, std::array<std::uint32_t, 2> k) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(kPhiloxM0, c[0], lo0, hi0);
        mulhilo(kPhiloxM1, c[2], lo1, hi1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kPhiloxW0;
        k[1] += kPhiloxW1;
    }
    return c;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t trial, std::uint32_t hop)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), hop, 0} {}

std::uint32_t PhiloxStream::next_u32() {
    if (used_ == 4) {
        block_ = philox4x32_10(counter_, key_);
        ++counter_[3];
        used_ = 0;
    }
    return block_[used_++];
}

double PhiloxStream::next_double() {
    std::uint64_t hi = next_u32();
    std::uint64_t lo = next_u32();
    return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
}

void validate_trial_config(const TrialConfig &cfg) {
    if (!(cfg.p >= 0 && cfg.p <= 1)) {
        throw std::invalid_argument("p must be in [0, 1]");
    }
    if (cfg.m < 1 || cfg.M < 1) {
        throw std::invalid_argument("m and M must be >= 1");
    }
    if (cfg.n_repeaters < 0) {
        throw std::invalid_argument("n_repeaters must be >= 0");
    }
    if (cfg.bond_count < 1) {
        throw std::invalid_argument("bond_count must be >= 1");
    }
    if (cfg.trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
}

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
    const double n = static_cast<double>(trials);
    const double ph = successes / n;
    const double z2 = z * z;
    const double centre = (ph + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z / (1 + z2 / n) * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n));
    double lo = centre - half;
    double hi = centre + half;
    // Rounding can push the bounds a hair past p_hat at 0 or 1.
    return {std::min(std::max(lo, 0.0), ph), std::max(std::min(hi, 1.0), ph)};
}

double binomial_z_score(double p_hat, double reference, std::int64_t trials) {
    double var = reference * (1 - reference) / static_cast<double>(trials);
    if (var <= 0) {
        if (p_hat == reference) {
            return 0;
        }
        return p_hat > reference ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
    }
    return (p_hat - reference) / std::sqrt(var);
}

EstimateWithCI make_estimate(std::int64_t successes, std::int64_t trials, std::uint64_t seed, double reference) {
    EstimateWithCI e;
    e.successes = successes;
    e.trials = trials;
    e.seed = seed;
    e.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    std::tie(e.ci_low, e.ci_high) = wilson_interval(successes, trials);
    e.analytic_reference = reference;
    e.z_score = binomial_z_score(e.p_hat, reference, trials);
    return e;
}

double binomial_tail_above(int n, double q, double threshold) {
    // Smallest failure count whose fraction strictly exceeds the threshold.
    int x = static_cast<int>(std::floor(threshold * n)) + 1;
    while (x > 0 && static_cast<double>(x - 1) / n > threshold) {
        --x;
    }
    if (x > n) {
        return 0;
    }
    if (x <= 0) {
        return 1;
    }
    if (q <= 0) {
        return 0;
    }
    if (q >= 1) {
        return 1;
    }
    boost::math::binomial_distribution<double> dist(n, q);
    return boost::math::cdf(boost::math::complement(dist, x - 1));
}

namespace {

bool bond_trial(PhiloxStream &rng, double p, std::int64_t attempts) {
    for (std::int64_t a = 0; a < attempts; ++a) {
        if (rng.bernoulli(p)) {
            return true;
        }
    }
    return false;
}

bool chain_trial(const TrialConfig &cfg, std::int64_t t) {
    const std::int64_t attempts = static_cast<std::int64_t>(cfg.m) * cfg.M;
    for (int h = 0; h <= cfg.n_repeaters; ++h) {
        PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(t), static_cast<std::uint32_t>(h));
        if (!bond_trial(rng, cfg.p, attempts)) {
            return false;
        }
    }
    return true;
}

int two_layer_trial(const TrialConfig &cfg, std::int64_t t) {
    const std::int64_t attempts = static_cast<std::int64_t>(cfg.m) * cfg.M;
    int failed = 0;
    for (int b = 0; b < cfg.bond_count; ++b) {
        PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(t), static_cast<std::uint32_t>(b));
        failed += bond_trial(rng, cfg.p, attempts) ? 0 : 1;
    }
    return failed;
}

double bond_reference(const TrialConfig &cfg) {
    return multiplexed_success(cfg.p, cfg.m, cfg.M);
}

EstimateWithCI chain_estimate(const TrialConfig &cfg, const std::vector<std::uint8_t> &ok) {
    std::int64_t s = 0;
    for (auto v : ok) {
        s += v;
    }
    double ref = std::pow(bond_reference(cfg), cfg.n_repeaters + 1);
    return make_estimate(s, cfg.trials, cfg.seed, ref);
}

TwoLayerStats two_layer_stats(const TrialConfig &cfg, const Thresholds &thresholds, const std::vector<int> &failed) {
    TwoLayerStats s;
    s.bond_success = bond_reference(cfg);
    const double q = 1 - s.bond_success;
    s.failure_histogram.assign(cfg.bond_count + 1, 0);
    std::int64_t total_failed = 0;
    std::int64_t above = 0;
    for (int f : failed) {
        ++s.failure_histogram[f];
        total_failed += f;
        if (static_cast<double>(f) / cfg.bond_count > thresholds.bond_fail_adaptive) {
            ++above;
        }
    }
    s.mean_failures = static_cast<double>(total_failed) / cfg.trials;
    s.analytic_mean_failures = cfg.bond_count * q;
    s.per_bond_failure = make_estimate(total_failed, cfg.trials * cfg.bond_count, cfg.seed, q);
    s.above_tolerance = make_estimate(above, cfg.trials, cfg.seed,
                                      binomial_tail_above(cfg.bond_count, q, thresholds.bond_fail_adaptive));
    return s;
}

}  // namespace

EstimateWithCI simulate_bond(const TrialConfig &cfg) {
    TrialConfig single = cfg;
    single.n_repeaters = 0;
    return simulate_chain(single);
}

EstimateWithCI simulate_chain(const TrialConfig &cfg) {
    validate_trial_config(cfg);
    std::vector<std::uint8_t> ok(cfg.trials);
    parallel_for(cfg.trials, [&](std::int64_t t) { ok[t] = chain_trial(cfg, t) ? 1 : 0; });
    return chain_estimate(cfg, ok);
}

TwoLayerStats simulate_two_layer(const TrialConfig &cfg, const Thresholds &thresholds) {
    validate_trial_config(cfg);
    std::vector<int> failed(cfg.trials);
    parallel_for(cfg.trials, [&](std::int64_t t) { failed[t] = two_layer_trial(cfg, t); });
    return two_layer_stats(cfg, thresholds, failed);
}

namespace serial {

EstimateWithCI simulate_bond(const TrialConfig &cfg) {
    TrialConfig single = cfg;
    single.n_repeaters = 0;
    return serial::simulate_chain(single);
}

EstimateWithCI simulate_chain(const TrialConfig &cfg) {
    validate_trial_config(cfg);
    std::vector<std::uint8_t> ok(cfg.trials);
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        ok[t] = chain_trial(cfg, t) ? 1 : 0;
    }
    return chain_estimate(cfg, ok);
}

TwoLayerStats simulate_two_layer(const TrialConfig &cfg, const Thresholds &thresholds) {
    validate_trial_config(cfg);
    std::vector<int> failed(cfg.trials);
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        failed[t] = two_layer_trial(cfg, t);
    }
    return two_layer_stats(cfg, thresholds, failed);
}

}  // namespace serial

}  // namespace ionlattice
