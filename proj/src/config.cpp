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

#include "ionlattice/config.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ionlattice/report.h"

namespace ionlattice {

namespace {

double parse_real(std::string_view key, std::string_view text) {
    double value = 0;
    auto first = text.data();
    auto last = text.data() + text.size();
    while (first < last && (*first == ' ' || *first == '\t')) {
        ++first;
    }
    while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) {
        --last;
    }
    if (first < last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("config key '" + std::string(key) + "': cannot parse '" + std::string(text) +
                                    "' as a number");
    }
    return value;
}

int parse_int(std::string_view key, std::string_view text) {
    double v = parse_real(key, text);
    if (v != static_cast<double>(static_cast<int>(v))) {
        throw std::invalid_argument("config key '" + std::string(key) + "': expected an integer, got '" +
                                    std::string(text) + "'");
    }
    return static_cast<int>(v);
}

using Setter = std::function<void(ParamBundle &, std::string_view key, std::string_view value)>;

struct Entry {
    std::string help;
    Setter set;
};


template <typename F>
Setter real_setter(F f, double divisor = 1.0) {
    return [f, divisor](ParamBundle &b, std::string_view key, std::string_view value) {
        f(b, parse_real(key, value) / divisor);
    };
}

template <typename F>
Setter int_setter(F f) {
    return [f](ParamBundle &b, std::string_view key, std::string_view value) { f(b, parse_int(key, value)); };
}

const std::vector<std::pair<std::string, Entry>> &table() {
    static const std::vector<std::pair<std::string, Entry>> entries = [] {
        std::vector<std::pair<std::string, Entry>> e;
        auto time_key = [&e](const std::string &base, const std::string &help, auto assign) {
            e.push_back({base + "_us", {help + " (microseconds)", real_setter(assign, 1e6)}});
            e.push_back({base + "_s", {help + " (seconds)", real_setter(assign, 1.0)}});
        };
        time_key("timing.tau", "clock cycle", [](ParamBundle &b, double v) { b.timing.tau = v; });
        time_key("timing.tau_a", "single-qubit gate time", [](ParamBundle &b, double v) { b.timing.tau_a = v; });
        time_key("timing.tau_b", "two-qubit gate time", [](ParamBundle &b, double v) { b.timing.tau_b = v; });
        time_key("timing.tau_d", "measurement time", [](ParamBundle &b, double v) { b.timing.tau_d = v; });
        time_key("timing.tau_m", "memory-ion lifetime", [](ParamBundle &b, double v) { b.timing.tau_m = v; });
        time_key("timing.tau_c", "communication-ion lifetime",
                 [](ParamBundle &b, double v) { b.timing.tau_c = v; });
        time_key("timing.tau_D", "qubit decoherence time", [](ParamBundle &b, double v) { b.timing.tau_D = v; });
        e.push_back({"timing.refractive_index",
                     {"fiber refractive index", real_setter([](ParamBundle &b, double v) {
                          b.timing.refractive_index = v;
                      })}});

        e.push_back({"channel.eta_cc", {"collection and coupling efficiency", real_setter([](ParamBundle &b, double v) {
                                            b.channel.eta_cc = v;
                                        })}});
        e.push_back({"channel.eta_det",
                     {"detection efficiency", real_setter([](ParamBundle &b, double v) { b.channel.eta_det = v; })}});
        e.push_back({"channel.alpha_att_db_per_km",
                     {"fiber attenuation (dB/km)",
                      real_setter([](ParamBundle &b, double v) { b.channel.alpha_att = v; })}});
        e.push_back({"channel.excess_noise_pd", {"excess photons per mode P_d", real_setter([](ParamBundle &b, double v) {
                                                     b.channel.excess_noise_pd = v;
                                                 })}});
        e.push_back({"channel.visibility",
                     {"mode-matching visibility", real_setter([](ParamBundle &b, double v) { b.channel.visibility = v; })}});

        e.push_back({"geometry.distance_km", {"inter-site distance (km)", real_setter([](ParamBundle &b, double v) {
                                                  b.geometry.inter_site_distance_km = v;
                                              })}});
        e.push_back({"geometry.n_repeaters",
                     {"repeaters per link", int_setter([](ParamBundle &b, int v) { b.geometry.n_repeaters = v; })}});
        e.push_back({"geometry.bond_count",
                     {"Bell pairs per two-layer cell", int_setter([](ParamBundle &b, int v) {
                          b.geometry.bond_count = v;
                          b.geometry.site_pair_factor = 2 * v;
                      })}});
        e.push_back({"geometry.site_pair_factor", {"ion-count multiplier (2 * bond_count)",
                                                   int_setter([](ParamBundle &b, int v) {
                                                       b.geometry.site_pair_factor = v;
                                                   })}});

        e.push_back({"thresholds.p_th", {"bond-success threshold", real_setter([](ParamBundle &b, double v) {
                                             b.thresholds.set_p_th(v);
                                         })}});
        e.push_back({"thresholds.bond_fail_adaptive",
                     {"tolerable bond failure rate, adaptive", real_setter([](ParamBundle &b, double v) {
                          b.thresholds.bond_fail_adaptive = v;
                      })}});
        e.push_back({"thresholds.bond_fail_nonadaptive",
                     {"tolerable bond failure rate, non-adaptive", real_setter([](ParamBundle &b, double v) {
                          b.thresholds.bond_fail_nonadaptive = v;
                      })}});
        e.push_back({"thresholds.measurement_error",
                     {"measurement error threshold", real_setter([](ParamBundle &b, double v) {
                          b.thresholds.measurement_error = v;
                      })}});
        e.push_back({"thresholds.stabilizer_floor",
                     {"minimum check-operator expectation", real_setter([](ParamBundle &b, double v) {
                          b.thresholds.set_stabilizer_floor(v);
                      })}});
        e.push_back({"thresholds.ft_rhs", {"fault-tolerance inequality bound", real_setter([](ParamBundle &b, double v) {
                                               b.thresholds.ft_rhs = v;
                                           })}});

        e.push_back({"multiplex.M",
                     {"spatial multiplexing degree", int_setter([](ParamBundle &b, int v) { b.multiplex.spatial_M = v; })}});
        e.push_back({"multiplex.m", {"temporal multiplexing degree", real_setter([](ParamBundle &b, double v) {
                                         b.multiplex.temporal_m = v;
                                     })}});
        return e;
    }();
    return entries;
}

}  // namespace

const std::vector<ConfigKey> &config_keys() {
    static const std::vector<ConfigKey> keys = [] {
        std::vector<ConfigKey> k;
        for (const auto &[name, entry] : table()) {
            k.push_back({name, entry.help});
        }
        return k;
    }();
    return keys;
}

void apply_setting(ParamBundle &bundle, std::string_view key, std::string_view value) {
    for (const auto &[name, entry] : table()) {
        if (name == key) {
            entry.set(bundle, key, value);
            return;
        }
    }
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

ParamBundle parse_config(std::istream &in) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error &e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    ParamBundle bundle = preset("table2");
    for (const auto &[section, children] : tree) {
        if (children.empty()) {
            throw std::invalid_argument("config key '" + section + "' must be inside a section");
        }
        for (const auto &[key, node] : children) {
            apply_setting(bundle, section + "." + key, node.data());
        }
    }
    return bundle;
}

ParamBundle parse_config_text(const std::string &text) {
    std::istringstream in(text);
    return parse_config(in);
}

ParamBundle load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    return parse_config(in);
}

std::string serialize_config(const ParamBundle &b) {
    auto num = [](double v) { return format_number(v); };
    std::ostringstream out;
    out << "[timing]\n";
    out << "tau_s = " << num(b.timing.tau) << "\n";
    out << "tau_a_s = " << num(b.timing.tau_a) << "\n";
    out << "tau_b_s = " << num(b.timing.tau_b) << "\n";
    out << "tau_d_s = " << num(b.timing.tau_d) << "\n";
    if (b.timing.tau_m) {
        out << "tau_m_s = " << num(*b.timing.tau_m) << "\n";
    }
    if (b.timing.tau_c) {
        out << "tau_c_s = " << num(*b.timing.tau_c) << "\n";
    }
    out << "tau_D_s = " << num(b.timing.tau_D) << "\n";
    out << "refractive_index = " << num(b.timing.refractive_index) << "\n";
    out << "\n[channel]\n";
    out << "eta_cc = " << num(b.channel.eta_cc) << "\n";
    out << "eta_det = " << num(b.channel.eta_det) << "\n";
    out << "alpha_att_db_per_km = " << num(b.channel.alpha_att) << "\n";
    out << "excess_noise_pd = " << num(b.channel.excess_noise_pd) << "\n";
    out << "visibility = " << num(b.channel.visibility) << "\n";
    out << "\n[geometry]\n";
    out << "distance_km = " << num(b.geometry.inter_site_distance_km) << "\n";
    out << "n_repeaters = " << b.geometry.n_repeaters << "\n";
    out << "bond_count = " << b.geometry.bond_count << "\n";
    out << "site_pair_factor = " << b.geometry.site_pair_factor << "\n";
    out << "\n[thresholds]\n";
    out << "p_th = " << num(b.thresholds.p_th) << "\n";
    out << "bond_fail_adaptive = " << num(b.thresholds.bond_fail_adaptive) << "\n";
    out << "bond_fail_nonadaptive = " << num(b.thresholds.bond_fail_nonadaptive) << "\n";
    out << "measurement_error = " << num(b.thresholds.measurement_error) << "\n";
    out << "stabilizer_floor = " << num(b.thresholds.stabilizer_floor) << "\n";
    out << "ft_rhs = " << num(b.thresholds.ft_rhs) << "\n";
    out << "\n[multiplex]\n";
    out << "M = " << b.multiplex.spatial_M << "\n";
    out << "m = " << num(b.multiplex.temporal_m) << "\n";
    return out.str();
}

}  // namespace ionlattice
