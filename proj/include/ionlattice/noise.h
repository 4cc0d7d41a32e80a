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

#include <string_view>
#include <vector>

#include "ionlattice/params.h"
#include "ionlattice/rational.h"

namespace ionlattice {

// How the heralded-state normalization N_d is formed. `trace` makes the state
// unit-trace (beta1 + 4 beta2 = 1); `two_term` sums only the two
// numerators, which does not.
enum class NormalizationMode { trace, two_term };

// rho = beta1 |Psi+><Psi+| + beta2 I_4 for the symmetric dual-rail swap with
// per-arm transmissivity sqrt(eta), perfect detectors and visibility.
struct BellMixtureCoefficients {
    double beta1 = 1;
    double beta2 = 0;
    double norm_Nd = 0;
    double eta = 1;
    double pd = 0;
    NormalizationMode normalization_mode = NormalizationMode::trace;
};

struct DepolarizingEquivalent {
    double delta = 1;             // sqrt(beta1)
    double pauli_error_rate = 0;  // 3 (1 - delta) / 4
};

BellMixtureCoefficients bell_coefficients(double eta, double pd,
                                          NormalizationMode mode = NormalizationMode::trace);

// Throws std::invalid_argument for two_term coefficients, which are not
// a unit-trace state.
DepolarizingEquivalent depolarizing_equivalent(const BellMixtureCoefficients &coeffs);
DepolarizingEquivalent depolarizing_from_beta1(double beta1);

// Coefficients of eps + a T/tau_D + b (1 - sqrt(beta1)) < rhs.
inline const Rational kFtDecoherenceCoefficient{35, 16};
inline const Rational kFtDepolarizingCoefficient{35, 64};
inline const Rational kFtRhsAtDefaultFloor{1, 256};

struct FtEvaluation {
    double lhs = 0;
    double rhs = 0;
    bool satisfied = false;
    double eps_term = 0;
    double decoherence_term = 0;
    double depolarizing_term = 0;
};

FtEvaluation ft_evaluate(double eps, double t_over_tauD, double beta1, const Thresholds &thresholds);

enum class Axis { eta, pd, beta1, eps, t_over_tauD };

std::string_view axis_name(Axis axis);
Axis parse_axis(std::string_view name);

struct AxisRange {
    Axis axis = Axis::beta1;
    double lo = 0;
    double hi = 1;
    bool log_scale = false;
};

// Values for the axes that are not swept.
struct NoisePoint {
    double eta = 1;
    double pd = 0;
    double beta1 = 1;
    double eps = 1e-4;
    double t_over_tauD = 1e-4;
};

struct FeasibilityGridSpec {
    AxisRange x;
    AxisRange y;
    NoisePoint fixed;
    int resolution = 200;
};

struct BoundaryPoint {
    double x = 0;
    double y = 0;
};

// cells[i * ys.size() + j] holds the evaluation at (xs[i], ys[j]).
struct FeasibilityGrid {
    FeasibilityGridSpec spec;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<FtEvaluation> cells;
    // Points where lhs crosses rhs, linearly interpolated between neighbouring
    // cells along x then along y.
    std::vector<BoundaryPoint> boundary;

    const FtEvaluation &at(size_t i, size_t j) const { return cells[i * ys.size() + j]; }
};

// Evaluates the inequality over a resolution x resolution grid. When eta or
// P_d is swept, beta1 comes from bell_coefficients in trace mode.
FeasibilityGrid feasibility_grid(const FeasibilityGridSpec &spec, const Thresholds &thresholds);

// Default grids for the three standard region plots: "ft15" (eta, P_d),
// "ft16" (beta1, T/tau_D) and "ft17" (beta1, eps).
FeasibilityGridSpec figure_grid_spec(std::string_view tag);

namespace serial {

FeasibilityGrid feasibility_grid(const FeasibilityGridSpec &spec, const Thresholds &thresholds);

}  // namespace serial

}  // namespace ionlattice
