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

#include "ionlattice/noise.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ionlattice/parallel.h"

namespace ionlattice {

BellMixtureCoefficients bell_coefficients(double eta, double pd, NormalizationMode mode) {
    if (!(eta > 0 && eta <= 1)) {
        throw std::invalid_argument("eta must be in (0, 1]; eta = 0 leaves the heralded state undefined");
    }
    if (!(pd >= 0 && pd < 1)) {
        throw std::invalid_argument("P_d must be in [0, 1)");
    }
    const double root = std::sqrt(eta);
    const double keep = 1.0 - pd;
    const double num1 = keep * keep * keep * keep * eta / 2.0;
    const double num2 =
        pd * keep * keep * (0.5 * keep * root * (1.0 - root) + pd * (1.0 - root) * (1.0 - root));

    BellMixtureCoefficients c;
    c.eta = eta;
    c.pd = pd;
    c.normalization_mode = mode;
    c.norm_Nd = mode == NormalizationMode::trace ? num1 + 4.0 * num2 : num1 + num2;
    c.beta1 = num1 / c.norm_Nd;
    c.beta2 = num2 / c.norm_Nd;
    return c;
}

DepolarizingEquivalent depolarizing_from_beta1(double beta1) {
    if (!(beta1 >= 0 && beta1 <= 1)) {
        throw std::invalid_argument("beta1 must be in [0, 1]");
    }
    DepolarizingEquivalent d;
    d.delta = std::sqrt(beta1);
    d.pauli_error_rate = 0.75 * (1.0 - d.delta);
    return d;
}

DepolarizingEquivalent depolarizing_equivalent(const BellMixtureCoefficients &coeffs) {
    if (coeffs.normalization_mode != NormalizationMode::trace) {
        throw std::invalid_argument(
            "depolarizing equivalence needs a unit-trace state; recompute the coefficients in trace mode");
    }
    auto d = depolarizing_from_beta1(coeffs.beta1);
    // Both qubits through the delta channel give delta^2 rho + (1 - delta^2)/4 I.
    double expected_beta2 = (1.0 - d.delta * d.delta) / 4.0;
    if (std::abs(expected_beta2 - coeffs.beta2) > 1e-12) {
        throw std::logic_error("beta2 does not match the two-channel depolarizing form");
    }
    return d;
}

FtEvaluation ft_evaluate(double eps, double t_over_tauD, double beta1, const Thresholds &thresholds) {
    if (!(beta1 >= 0 && beta1 <= 1)) {
        throw std::invalid_argument("beta1 must be in [0, 1]");
    }
    if (!(t_over_tauD >= 0) || !(eps >= 0)) {
        throw std::invalid_argument("eps and T/tau_D must be >= 0");
    }
    FtEvaluation f;
    f.eps_term = eps;
    f.decoherence_term = to_double(kFtDecoherenceCoefficient) * t_over_tauD;
    f.depolarizing_term = to_double(kFtDepolarizingCoefficient) * (1.0 - std::sqrt(beta1));
    f.lhs = f.eps_term + f.decoherence_term + f.depolarizing_term;
    f.rhs = thresholds.ft_rhs;
    f.satisfied = f.lhs < f.rhs;
    return f;
}

std::string_view axis_name(Axis axis) {
    switch (axis) {
        case Axis::eta:
            return "eta";
        case Axis::pd:
            return "pd";
        case Axis::beta1:
            return "beta1";
        case Axis::eps:
            return "eps";
        case Axis::t_over_tauD:
            return "t_over_tauD";
    }
    return "?";
}

Axis parse_axis(std::string_view name) {
    for (Axis a : {Axis::eta, Axis::pd, Axis::beta1, Axis::eps, Axis::t_over_tauD}) {
        if (axis_name(a) == name) {
            return a;
        }
    }
    throw std::invalid_argument("unknown axis '" + std::string(name) +
                                "' (expected eta, pd, beta1, eps or t_over_tauD)");
}

namespace {

std::vector<double> axis_values(const AxisRange &r, int resolution) {
    if (!(r.hi > r.lo)) {
        throw std::invalid_argument("axis " + std::string(axis_name(r.axis)) + " has an empty or inverted range");
    }
    if (r.log_scale && !(r.lo > 0)) {
        throw std::invalid_argument("log-scaled axis " + std::string(axis_name(r.axis)) + " needs lo > 0");
    }
    std::vector<double> v(resolution);
    for (int k = 0; k < resolution; ++k) {
        double t = resolution == 1 ? 0.0 : static_cast<double>(k) / (resolution - 1);
        v[k] = r.log_scale ? r.lo * std::pow(r.hi / r.lo, t) : r.lo + (r.hi - r.lo) * t;
    }
    v.back() = r.hi;
    return v;
}

void set_axis(NoisePoint &p, Axis a, double value) {
    switch (a) {
        case Axis::eta:
            p.eta = value;
            break;
        case Axis::pd:
            p.pd = value;
            break;
        case Axis::beta1:
            p.beta1 = value;
            break;
        case Axis::eps:
            p.eps = value;
            break;
        case Axis::t_over_tauD:
            p.t_over_tauD = value;
            break;
    }
}

bool derives_beta1(const FeasibilityGridSpec &spec) {
    auto optical = [](Axis a) { return a == Axis::eta || a == Axis::pd; };
    return optical(spec.x.axis) || optical(spec.y.axis);
}

void check_spec(const FeasibilityGridSpec &spec) {
    if (spec.x.axis == spec.y.axis) {
        throw std::invalid_argument("feasibility grid needs two distinct axes");
    }
    if (spec.resolution < 2) {
        throw std::invalid_argument("feasibility grid resolution must be >= 2");
    }
    if (derives_beta1(spec) && (spec.x.axis == Axis::beta1 || spec.y.axis == Axis::beta1)) {
        throw std::invalid_argument("beta1 cannot be swept together with eta or pd, it is derived from them");
    }
}

FtEvaluation evaluate_cell(const FeasibilityGridSpec &spec, double x, double y, const Thresholds &thresholds) {
    NoisePoint p = spec.fixed;
    set_axis(p, spec.x.axis, x);
    set_axis(p, spec.y.axis, y);
    if (derives_beta1(spec)) {
        p.beta1 = bell_coefficients(p.eta, p.pd).beta1;
    }
    return ft_evaluate(p.eps, p.t_over_tauD, p.beta1, thresholds);
}

void extract_boundary(FeasibilityGrid &g) {
    const size_t nx = g.xs.size();
    const size_t ny = g.ys.size();
    auto crossing = [](double a, double b, double rhs) {
        return (a < rhs) != (b < rhs);
    };
    auto fraction = [](double a, double b, double rhs) { return a == b ? 0.5 : (rhs - a) / (b - a); };
    for (size_t i = 0; i + 1 < nx; ++i) {
        for (size_t j = 0; j < ny; ++j) {
            double a = g.at(i, j).lhs;
            double b = g.at(i + 1, j).lhs;
            double rhs = g.at(i, j).rhs;
            if (crossing(a, b, rhs)) {
                double t = fraction(a, b, rhs);
                g.boundary.push_back({g.xs[i] + t * (g.xs[i + 1] - g.xs[i]), g.ys[j]});
            }
        }
    }
    for (size_t i = 0; i < nx; ++i) {
        for (size_t j = 0; j + 1 < ny; ++j) {
            double a = g.at(i, j).lhs;
            double b = g.at(i, j + 1).lhs;
            double rhs = g.at(i, j).rhs;
            if (crossing(a, b, rhs)) {
                double t = fraction(a, b, rhs);
                g.boundary.push_back({g.xs[i], g.ys[j] + t * (g.ys[j + 1] - g.ys[j])});
            }
        }
    }
}

FeasibilityGrid make_grid(const FeasibilityGridSpec &spec) {
    check_spec(spec);
    FeasibilityGrid g;
    g.spec = spec;
    g.xs = axis_values(spec.x, spec.resolution);
    g.ys = axis_values(spec.y, spec.resolution);
    g.cells.resize(g.xs.size() * g.ys.size());
    return g;
}

}  // namespace

FeasibilityGrid feasibility_grid(const FeasibilityGridSpec &spec, const Thresholds &thresholds) {
    FeasibilityGrid g = make_grid(spec);
    const auto ny = static_cast<std::int64_t>(g.ys.size());
    parallel_for(static_cast<std::int64_t>(g.cells.size()), [&](std::int64_t k) {
        g.cells[k] = evaluate_cell(spec, g.xs[k / ny], g.ys[k % ny], thresholds);
    });
    extract_boundary(g);
    return g;
}

namespace serial {

FeasibilityGrid feasibility_grid(const FeasibilityGridSpec &spec, const Thresholds &thresholds) {
    FeasibilityGrid g = make_grid(spec);
    for (size_t i = 0; i < g.xs.size(); ++i) {
        for (size_t j = 0; j < g.ys.size(); ++j) {
            g.cells[i * g.ys.size() + j] = evaluate_cell(spec, g.xs[i], g.ys[j], thresholds);
        }
    }
    extract_boundary(g);
    return g;
}

}  // namespace serial

FeasibilityGridSpec figure_grid_spec(std::string_view tag) {
    FeasibilityGridSpec s;
    s.resolution = 200;
    s.fixed.eps = 1e-4;
    s.fixed.t_over_tauD = 1e-4;
    if (tag == "ft15") {
        s.x = {Axis::eta, 0.01, 1.0, false};
        s.y = {Axis::pd, 0.0, 0.5, false};
    } else if (tag == "ft16") {
        s.x = {Axis::beta1, 0.98, 1.0, false};
        s.y = {Axis::t_over_tauD, 0.0, 2e-3, false};
    } else if (tag == "ft17") {
        s.x = {Axis::beta1, 0.98, 1.0, false};
        s.y = {Axis::eps, 0.0, 5e-3, false};
    } else {
        throw std::invalid_argument("unknown feasibility figure '" + std::string(tag) + "'");
    }
    return s;
}

}  // namespace ionlattice
