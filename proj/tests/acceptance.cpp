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

// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>

#include "ionlattice/codecycle.h"
#include "ionlattice/entanglement.h"
#include "ionlattice/montecarlo.h"
#include "ionlattice/noise.h"
#include "ionlattice/unit_cell.h"

using namespace ionlattice;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

Outcome appendix_totals() {
    Outcome o;
    auto t0 = Clock::now();
    std::string cmd = std::string(IONLATTICE_CLI_PATH) + " verify-appendix > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    double elapsed = seconds_since(t0);
    o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "verify-appendix exit code");
    o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    auto a = audit_appendix(UnitCellConfig{}, Rational(7, 10));
    o.require(a.enumeration.coefficients.total() == Coefficients{Rational(1152, 15), 168, 42},
              "total " + to_string(a.enumeration.coefficients.total()));
    o.require(a.inequality && a.inequality->a == Rational(35, 16) && a.inequality->b == Rational(35, 64) &&
                  to_double(a.inequality->rhs) == 0.00390625,
              "normalized inequality");
    if (o.pass) {
        o.detail = "total (1152/15, 168, 42), eps + 35/16 T/tau_D + 35/64 (1 - sqrt(beta1)) < 0.00390625, " +
                   std::to_string(elapsed).substr(0, 5) + " s";
    }
    return o;
}

Outcome per_type() {
    Outcome o;
    auto a = audit_appendix(UnitCellConfig{}, Rational(7, 10));
    const auto &c = a.enumeration.coefficients;
    o.require(c.type_I == Coefficients{0, 8, 6}, "type I " + to_string(c.type_I));
    o.require(c.type_II == Coefficients{Rational(1032, 15), 160, 36}, "type II " + to_string(c.type_II));
    o.require(c.type_III == Coefficients{8, 0, 0}, "type III " + to_string(c.type_III));
    o.require(a.discrepancies.empty(), std::to_string(a.discrepancies.size()) + " itemized discrepancies");
    if (o.pass) {
        o.detail = "I " + to_string(c.type_I) + ", II " + to_string(c.type_II) + ", III " + to_string(c.type_III);
    }
    return o;
}

Outcome multiplexing_identity() {
    Outcome o;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> lp(std::log(1e-4), std::log(0.5));
    std::uniform_real_distribution<double> uth(0.05, 0.999);
    int non_integer = 0;
    for (int i = 0; i < 100; ++i) {
        double p = std::exp(lp(rng));
        double th = uth(rng);
        double Mm = required_multiplex_product(p, th);
        o.require(success_after_attempts(p, std::ceil(Mm)) >= th, "ceil below threshold");
        if (Mm != std::floor(Mm)) {
            ++non_integer;
            if (std::floor(Mm) >= 1) {
                o.require(success_after_attempts(p, std::floor(Mm)) < th, "floor reaches threshold");
            }
        }
        o.require(rel_close(success_after_attempts(p, Mm), th, 1e-12), "round trip");
    }
    if (o.pass) {
        o.detail = "100 draws, " + std::to_string(non_integer) + " non-integer Mm";
    }
    return o;
}

Outcome monte_carlo() {
    Outcome o;
    auto t0 = Clock::now();
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> lp(std::log(1e-3), std::log(0.5));
    const int configs = 60;
    int ok_bond = 0, ok_chain = 0, ok_layer = 0;
    for (int i = 0; i < configs; ++i) {
        TrialConfig c;
        c.p = std::exp(lp(rng));
        c.m = 1 + static_cast<int>(rng() % 20);
        c.M = 1 + static_cast<int>(rng() % 10);
        c.n_repeaters = 1 + static_cast<int>(rng() % 4);
        c.bond_count = 16;
        c.trials = 10000;
        c.seed = rng();
        ok_bond += std::abs(simulate_bond(c).z_score) < 4;
        ok_chain += std::abs(simulate_chain(c).z_score) < 4;
        auto s = simulate_two_layer(c, Thresholds{});
        ok_layer += std::abs(s.per_bond_failure.z_score) < 4 && std::abs(s.above_tolerance.z_score) < 4;
    }
    double elapsed = seconds_since(t0);
    const int need = static_cast<int>(std::ceil(0.98 * configs));
    o.require(ok_bond >= need, "bond " + std::to_string(ok_bond));
    o.require(ok_chain >= need, "chain " + std::to_string(ok_chain));
    o.require(ok_layer >= need, "two-layer " + std::to_string(ok_layer));
    o.require(elapsed < 60, "runtime " + std::to_string(elapsed));
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("|z|<4 in ") + std::to_string(ok_bond) + "/" +
                std::to_string(ok_chain) + "/" + std::to_string(ok_layer) + " of " + std::to_string(configs) +
                " configs, " + std::to_string(elapsed).substr(0, 5) + " s";
    return o;
}

Outcome code_cycle() {
    Outcome o;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 10);
    for (int i = 0; i < 1000; ++i) {
        TimingParams t;
        t.tau = u(rng) * 1e-6;
        t.tau_b = u(rng) * 1e-6;
        t.tau_d = u(rng) * 1e-5;
        auto s = code_cycle_schedule(t, u(rng) * 20, u(rng) * 1e-6);
        o.require(rel_close(s.tau4, 10 * s.T + 2 * t.tau_d, 4e-16), "tau4 identity");
    }
    auto s = code_cycle_from_probability(TimingParams::table2(), ChannelParams::standard(), 1e-9, 1, 0.855);
    o.require(rel_close(s.tau4, 638.6e-6, 1e-3), "worked example " + std::to_string(s.tau4 * 1e6) + " us");
    if (o.pass) {
        o.detail = "1000 draws; tau4 = " + std::to_string(s.tau4 * 1e6) + " us at p = 0.5, M = 1";
    }
    return o;
}

Outcome ion_counts() {
    Outcome o;
    auto t = TimingParams::table2();
    Geometry g;
    const int j = reuse_window(t);
    int plateau_points = 0;
    for (int M : {1, 5, 10, 20, 30, 50}) {
        for (double p = 1e-4; p < 0.5; p *= 1.2) {
            auto b = ion_budget_without_repeaters(p, M, 0.855, t, g);
            if (b.m >= j) {
                ++plateau_points;
                o.require(b.communication_ions_exact == 32.0 * M * j, "plateau");
            }
        }
    }
    for (double p : {1e-4, 1e-3, 1e-2, 0.1}) {
        double ref = ion_budget_without_repeaters(p, 1, 0.855, t, g).memory_ions_exact;
        for (int M = 1; M <= 300; M += 13) {
            o.require(rel_close(ion_budget_without_repeaters(p, M, 0.855, t, g).memory_ions_exact, ref, 1e-12),
                      "memory product");
        }
    }
    if (o.pass) {
        o.detail = "plateau 32 M j (j = " + std::to_string(j) + ") at " + std::to_string(plateau_points) +
                   " points; memory invariant across M";
    }
    return o;
}

Outcome repeater_crossover() {
    Outcome o;
    RepeaterComparisonSpec spec;
    spec.distances_km = default_distance_grid();
    spec.repeater_counts = {1, 2, 3, 4};
    auto rows = repeater_comparison_table(spec, TimingParams::table2(), Geometry{}, ChannelParams::standard());
    double NR = 0, NWR = 0;
    for (const auto &r : rows) {
        if (r.distance_km == spec.distances_km.front()) {
            o.require(r.memory_with > r.memory_without, "short-distance n=" + std::to_string(r.n_repeaters));
        }
        if (r.distance_km == 200) {
            o.require(r.memory_with < r.memory_without, "200 km n=" + std::to_string(r.n_repeaters));
            if (r.n_repeaters == 3) {
                NR = r.memory_with;
                NWR = r.memory_without;
            }
        }
    }
    double NR_hand = 128 * std::log(1 - std::pow(0.855, 0.25)) / std::log(0.95);
    double NWR_hand = 32 * std::log(0.145) / std::log1p(-0.5e-4);
    o.require(rel_close(NR, NR_hand, 1e-9) && rel_close(NR, 8133, 0.01), "N_R " + std::to_string(NR));
    o.require(rel_close(NWR, NWR_hand, 1e-9) && rel_close(NWR, 1.236e6, 0.01), "N_WR " + std::to_string(NWR));
    if (o.pass) {
        o.detail = "L=200, n=3: N_R = " + std::to_string(NR) + ", N_WR = " + std::to_string(NWR);
    }
    return o;
}

Outcome noise_limits() {
    Outcome o;
    for (int i = 1; i <= 200; ++i) {
        double x = i / 200.0;
        o.require(bell_coefficients(x, 0).beta1 == 1.0, "beta1(eta, 0)");
        o.require(bell_coefficients(1.0, 0.995 * (i - 1) / 199.0).beta1 == 1.0, "beta1(1, P_d)");
        for (int j = 0; j < 200; j += 7) {
            auto c = bell_coefficients(x, 0.99 * j / 200.0);
            o.require(std::abs(c.beta1 + 4 * c.beta2 - 1) <= 4e-16, "trace");
            auto d = depolarizing_equivalent(c);
            o.require(std::abs(d.delta * d.delta - c.beta1) <= 1e-15, "delta round trip");
            o.require(std::abs(d.pauli_error_rate - 0.75 * (1 - std::sqrt(c.beta1))) <= 1e-16, "p = 3(1-delta)/4");
            o.require(std::abs((1 - d.delta * d.delta) / 4 - c.beta2) <= 1e-15, "two-channel beta2");
        }
    }
    if (o.pass) {
        o.detail = "limits, trace, delta and p identities on a 200-point grid";
    }
    return o;
}

Outcome ft_spots() {
    Outcome o;
    Thresholds th;
    auto a = ft_evaluate(1e-4, 1e-4, 1, th);
    o.require(a.satisfied && std::abs(a.lhs - 3.1875e-4) < 1e-18, "beta1 = 1 point");
    auto b = ft_evaluate(1e-4, 1e-4, 0.98, th);
    o.require(!b.satisfied, "beta1 = 0.98 point");
    for (const char *tag : {"ft16", "ft17"}) {
        auto g = feasibility_grid(figure_grid_spec(tag), th);
        o.require(g.cells.size() == 40000, "grid shape");
        for (size_t i = 0; i < g.xs.size(); ++i) {
            for (size_t j = 0; j < g.ys.size(); ++j) {
                if (i + 1 < g.xs.size()) {
                    o.require(g.at(i, j).lhs >= g.at(i + 1, j).lhs, "non-increasing in beta1");
                }
                if (j + 1 < g.ys.size()) {
                    o.require(g.at(i, j).lhs <= g.at(i, j + 1).lhs, "non-decreasing in noise axis");
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "lhs = 3.1875e-4 satisfied, beta1 = 0.98 lhs = " + std::to_string(b.lhs) +
                   " violated, monotone on 200x200";
    }
    return o;
}

}  // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"appendix totals and inequality", appendix_totals},
        {"per-type coefficients", per_type},
        {"multiplexing identity", multiplexing_identity},
        {"Monte Carlo vs analytics", monte_carlo},
        {"code-cycle identities", code_cycle},
        {"ion-count properties", ion_counts},
        {"repeater crossover", repeater_crossover},
        {"noise-model limits", noise_limits},
        {"FT region spot checks", ft_spots},
    };
    int failed = 0;
    int k = 1;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k++ << ": " << name << " -- " << o.detail
                  << std::endl;
    }
    return failed;
}
