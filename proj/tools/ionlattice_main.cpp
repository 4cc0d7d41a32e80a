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

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ionlattice/config.h"
#include "ionlattice/entanglement.h"
#include "ionlattice/montecarlo.h"
#include "ionlattice/noise.h"
#include "ionlattice/report.h"
#include "ionlattice/sweeps.h"
#include "ionlattice/unit_cell.h"

using namespace ionlattice;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;

struct Globals {
    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials;
    std::optional<std::string> out;
    int precision = 0;
    std::map<std::string, std::optional<std::string>> overrides;
};

ParamBundle load_bundle(const Globals &g) {
    ParamBundle b = preset("table2");
    std::optional<std::string> path = g.config_path;
    if (!path) {
        if (const char *env = std::getenv("IONLATTICE_CONFIG"); env && *env) {
            path = env;
        }
    }
    if (path) {
        b = load_config_file(*path);
    }
    for (const auto &[key, value] : g.overrides) {
        if (value) {
            apply_setting(b, key, *value);
        }
    }
    return validate_or_throw(b);
}

void emit_table(const Globals &g, ReportRecord record) {
    record.metadata.tool_version = IONLATTICE_VERSION;
    record.metadata.timestamp = utc_timestamp();
    if (!g.out) {
        write_csv(std::cout, record.payload, g.precision);
        return;
    }
    std::ofstream f(*g.out);
    if (!f) {
        throw std::invalid_argument("cannot write " + *g.out);
    }
    write_csv(f, record.payload, g.precision);
    std::ofstream meta(*g.out + ".meta.json");
    meta << metadata_json(record);
}

std::string echo(double v) {
    return format_number(v);
}

AxisRange parse_range(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) {
        parts.push_back(part);
    }
    if (parts.size() != 3 && !(parts.size() == 4 && parts[3] == "log")) {
        throw std::invalid_argument("axis range must look like name:lo:hi or name:lo:hi:log, got '" + text + "'");
    }
    AxisRange r;
    r.axis = parse_axis(parts[0]);
    r.lo = std::stod(parts[1]);
    r.hi = std::stod(parts[2]);
    r.log_scale = parts.size() == 4;
    return r;
}

void set_fixed(NoisePoint &p, const std::string &assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw std::invalid_argument("fixed value must look like axis=value, got '" + assignment + "'");
    }
    double v = std::stod(assignment.substr(eq + 1));
    switch (parse_axis(assignment.substr(0, eq))) {
        case Axis::eta:
            p.eta = v;
            break;
        case Axis::pd:
            p.pd = v;
            break;
        case Axis::beta1:
            p.beta1 = v;
            break;
        case Axis::eps:
            p.eps = v;
            break;
        case Axis::t_over_tauD:
            p.t_over_tauD = v;
            break;
    }
}

void print_estimate_line(std::ostream &os, const std::string &name, const EstimateWithCI &e) {
    os << name << ": p_hat=" << format_number(e.p_hat, 6) << " ci=[" << format_number(e.ci_low, 6) << ", "
       << format_number(e.ci_high, 6) << "] analytic=" << format_number(e.analytic_reference, 6)
       << " z=" << format_number(e.z_score, 4) << "\n";
}

std::vector<Cell> estimate_row(const std::string &name, const EstimateWithCI &e) {
    return {name,     e.p_hat,  e.ci_low, e.ci_high, e.successes, e.trials, static_cast<std::int64_t>(e.seed),
            e.analytic_reference, e.z_score};
}

const std::vector<std::string> kEstimateColumns{"metric", "p_hat", "ci_low", "ci_high", "successes",
                                                "trials", "seed",  "analytic", "z"};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Resource and fault-tolerance estimates for a modular trapped-ion lattice"};
    app.set_version_flag("--version", IONLATTICE_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--config", g.config_path, "INI config file (default: $IONLATTICE_CONFIG)");
    app.add_option("--seed", g.seed, "master seed for simulations");
    app.add_option("--trials", g.trials, "Monte Carlo trials");
    app.add_option("--out", g.out, "write the table here plus a .meta.json sidecar");
    app.add_option("--precision", g.precision, "significant digits (0 = shortest round trip)")
        ->check(CLI::Range(0, 17));
    for (const auto &key : config_keys()) {
        app.add_option("--" + key.name, g.overrides[key.name], key.help)->group("Config keys");
    }

    auto *estimate = app.add_subcommand("estimate", "code cycle and ion counts at one operating point");
    std::optional<double> est_p;
    estimate->add_option("--p", est_p, "per-attempt success (default: from channel and distance)");
    estimate->add_option("--M", g.overrides["multiplex.M"], "spatial multiplexing");
    estimate->add_option("--distance", g.overrides["geometry.distance_km"], "inter-site distance in km");
    estimate->add_option("--p_th", g.overrides["thresholds.p_th"], "bond-success threshold");

    auto *sweep = app.add_subcommand("sweep", "figure data");
    std::string sweep_tag;
    sweep->add_option("figure", sweep_tag, "figure tag")->required()->check(CLI::IsMember(sweep_tags()));

    auto *repeaters = app.add_subcommand("repeaters", "ion counts with and without repeaters");
    std::vector<double> rep_distances = default_distance_grid();
    std::vector<int> rep_counts{1, 2, 3, 4};
    repeaters->add_option("--distances", rep_distances, "distances in km")->delimiter(',')->capture_default_str();
    repeaters->add_option("--n", rep_counts, "repeater counts")->delimiter(',')->capture_default_str();

    auto *ft = app.add_subcommand("ft-region", "fault-tolerance feasibility grid");
    std::optional<std::string> ft_figure;
    std::optional<std::string> ft_x;
    std::optional<std::string> ft_y;
    std::vector<std::string> ft_fixed;
    std::optional<int> ft_resolution;
    std::optional<std::string> ft_boundary_out;
    ft->add_option("--figure", ft_figure, "start from a preset grid")->check(CLI::IsMember({"ft15", "ft16", "ft17"}));
    ft->add_option("--x", ft_x, "axis range name:lo:hi[:log]");
    ft->add_option("--y", ft_y, "axis range name:lo:hi[:log]");
    ft->add_option("--fix", ft_fixed, "fixed axis value, e.g. eps=1e-4");
    ft->add_option("--resolution", ft_resolution, "cells per axis")->check(CLI::Range(2, 100000));
    ft->add_option("--boundary-out", ft_boundary_out, "write the interpolated boundary here");

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo check of the analytic probabilities");
    std::string sim_kind;
    std::optional<double> sim_p;
    simulate->add_option("kind", sim_kind, "bond, chain or two-layer")
        ->required()
        ->check(CLI::IsMember({"bond", "chain", "two-layer"}));
    simulate->add_option("--p", sim_p, "per-attempt success (default: from channel and distance)")
        ->check(CLI::Range(0.0, 1.0));

    auto *verify = app.add_subcommand("verify-appendix", "recount first-order stabilizer errors in the unit cell");
    std::optional<std::string> floor_text;
    UnitCellConfig cell;
    verify->add_option("--floor", floor_text, "stabilizer expectation floor, as a decimal");
    verify->add_option("--pairs", cell.initial_pairs, "initial Bell pairs")->capture_default_str();
    auto *links_opt = verify->add_option("--links", cell.in_cell_links,
                                         "in-cell teleported CNOT links; neighbor links follow as 1/3 odd, 2/3 even")
                          ->capture_default_str();
    auto *odd_opt = verify->add_option("--neighbor-odd", cell.neighbor_odd_links, "neighbor links reaching one face")
                        ->capture_default_str();
    auto *even_opt = verify->add_option("--neighbor-even", cell.neighbor_even_links, "neighbor links reaching two faces")
                         ->capture_default_str();
    verify->add_option("--faces", cell.measured_faces, "face readouts")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        const ParamBundle bundle = load_bundle(g);
        const std::pair<std::string, std::string> config_echo{"config", serialize_config(bundle)};

        if (*estimate) {
            Table t = estimate_table(bundle, est_p);
            double m = std::get<double>(t.rows[0][3]);
            auto step = time_step_duration(bundle.timing, m,
                                           heralding_time(bundle.geometry.inter_site_distance_km,
                                                          bundle.timing.refractive_index));
            if (step.warning) {
                std::cerr << "warning: " << *step.warning << "\n";
            }
            std::vector<std::pair<std::string, std::string>> in{config_echo};
            if (est_p) {
                in.emplace_back("p", echo(*est_p));
            }
            emit_table(g, {"estimate", in, t, {}});
            return kExitOk;
        }
        if (*sweep) {
            emit_table(g, {"sweep", {config_echo, {"figure", sweep_tag}}, sweep_table(sweep_tag, bundle), {}});
            return kExitOk;
        }
        if (*repeaters) {
            RepeaterComparisonSpec spec{rep_distances, rep_counts, bundle.multiplex.temporal_m,
                                        bundle.thresholds.p_th};
            auto rows = repeater_comparison_table(spec, bundle.timing, bundle.geometry, bundle.channel);
            emit_table(g, {"repeaters", {config_echo}, repeater_table(rows), {}});
            return kExitOk;
        }
        if (*ft) {
            FeasibilityGridSpec spec = figure_grid_spec(ft_figure.value_or("ft15"));
            if (!ft_figure && !(ft_x && ft_y)) {
                throw std::invalid_argument("ft-region needs --figure or both --x and --y");
            }
            if (ft_x) {
                spec.x = parse_range(*ft_x);
            }
            if (ft_y) {
                spec.y = parse_range(*ft_y);
            }
            for (const auto &f : ft_fixed) {
                set_fixed(spec.fixed, f);
            }
            if (ft_resolution) {
                spec.resolution = *ft_resolution;
            }
            auto grid = feasibility_grid(spec, bundle.thresholds);
            if (ft_boundary_out) {
                std::ofstream b(*ft_boundary_out);
                write_csv(b, boundary_table(grid), g.precision);
            }
            emit_table(g, {"ft-region", {config_echo}, feasibility_table(grid), {}});
            return kExitOk;
        }
        if (*simulate) {
            TrialConfig cfg;
            cfg.m = bundle.multiplex.temporal_m_ceil();
            cfg.M = bundle.multiplex.spatial_M;
            cfg.n_repeaters = bundle.geometry.n_repeaters;
            cfg.bond_count = bundle.geometry.bond_count;
            cfg.trials = g.trials.value_or(10000);
            cfg.seed = g.seed.value_or(1);
            const double L = bundle.geometry.inter_site_distance_km;
            if (sim_p) {
                cfg.p = *sim_p;
            } else if (sim_kind == "chain") {
                cfg.p = per_hop_success_with_repeaters(bundle.channel, L, cfg.n_repeaters).p0_prime;
            } else {
                cfg.p = attempt_success_probability(bundle.channel, L).p;
            }
            Table t{kEstimateColumns, {}};
            bool agree = true;
            if (sim_kind == "two-layer") {
                auto s = simulate_two_layer(cfg, bundle.thresholds);
                t.add_row(estimate_row("per_bond_failure", s.per_bond_failure));
                t.add_row(estimate_row("above_tolerance", s.above_tolerance));
                for (size_t k = 0; k < s.failure_histogram.size(); ++k) {
                    t.add_row({"failed_bonds_" + std::to_string(k),
                               static_cast<double>(s.failure_histogram[k]) / cfg.trials, std::string(), std::string(),
                               s.failure_histogram[k], cfg.trials, static_cast<std::int64_t>(cfg.seed), std::string(),
                               std::string()});
                }
                print_estimate_line(std::cerr, "per_bond_failure", s.per_bond_failure);
                print_estimate_line(std::cerr, "above_tolerance", s.above_tolerance);
                std::cerr << "mean_failures=" << format_number(s.mean_failures, 6)
                          << " analytic=" << format_number(s.analytic_mean_failures, 6) << "\n";
                agree = std::abs(s.per_bond_failure.z_score) < 4 && std::abs(s.above_tolerance.z_score) < 4;
            } else {
                auto e = sim_kind == "bond" ? simulate_bond(cfg) : simulate_chain(cfg);
                t.add_row(estimate_row(sim_kind, e));
                print_estimate_line(std::cerr, sim_kind, e);
                agree = std::abs(e.z_score) < 4;
            }
            ReportRecord rec{"simulate",
                             {config_echo,
                              {"kind", sim_kind},
                              {"p", echo(cfg.p)},
                              {"m", std::to_string(cfg.m)},
                              {"M", std::to_string(cfg.M)},
                              {"n_repeaters", std::to_string(cfg.n_repeaters)},
                              {"bond_count", std::to_string(cfg.bond_count)},
                              {"trials", std::to_string(cfg.trials)}},
                             t,
                             {}};
            rec.metadata.seed = cfg.seed;
            emit_table(g, rec);
            return agree ? kExitOk : kExitVerificationFailed;
        }
        if (*verify) {
            Rational floor = parse_decimal_rational(floor_text.value_or(format_number(bundle.thresholds.stabilizer_floor)));
            if (links_opt->count() > 0) {
                if (odd_opt->count() == 0) {
                    cell.neighbor_odd_links = cell.in_cell_links / 3;
                }
                if (even_opt->count() == 0) {
                    cell.neighbor_even_links = cell.in_cell_links - cell.in_cell_links / 3;
                }
            }
            auto audit = audit_appendix(cell, floor);
            std::string report = audit_report_json(audit);
            if (g.out) {
                std::ofstream(*g.out) << report;
            } else {
                std::cout << report;
            }
            if (audit.inequality) {
                const auto &q = *audit.inequality;
                std::cerr << "eps + " << to_string(q.a) << " T/tau_D + " << to_string(q.b)
                          << " (1 - sqrt(beta1)) < " << to_string(q.rhs) << " = "
                          << format_number(to_double(q.rhs), 6) << "\n";
            }
            std::cerr << (audit.ok ? "verified" : "MISMATCH, see discrepancies") << "\n";
            return audit.ok ? kExitOk : kExitVerificationFailed;
        }
    } catch (const UnreachableThreshold &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
