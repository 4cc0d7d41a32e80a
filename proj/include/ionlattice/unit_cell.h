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

#include <optional>
#include <string>
#include <vector>

#include "ionlattice/pauli.h"
#include "ionlattice/rational.h"

namespace ionlattice {

// Structural counts of the unit-cell accounting. Defaults are the cubic-cell
// values; neighbor_odd_links is taken as given, not derived from adjacency.
struct UnitCellConfig {
    int initial_pairs = 3;
    int in_cell_links = 18;
    int neighbor_odd_links = 6;
    int neighbor_even_links = 12;
    int measured_faces = 6;

    bool is_default() const;
    bool operator==(const UnitCellConfig &) const = default;
};

enum class ErrorType { type_I, type_II, type_III };
std::string to_string(ErrorType t);

enum class EventKind {
    bell_prep,  // noisy; one depolarizing source per qubit
    memory,     // noisy; one idle source per qubit
    cnot,       // noisy two-qubit gate
    measure,    // noisy; consumes the qubit, may feed forward a Pauli
    fan_out,    // noiseless CNOT into downstream faces
    fold,       // collapse an untouched Bell pair onto its anchor
    readout,    // noisy final face measurement; does not remove the qubit
};

enum class Basis { X, Z };

struct Event {
    EventKind kind = EventKind::memory;
    ErrorType group = ErrorType::type_I;
    // cnot / fan_out: {control, target}; fold: {anchor, partner}; otherwise the
    // qubits acted on.
    std::vector<QubitId> qubits;
    Basis basis = Basis::Z;
    std::optional<QubitId> feed_target;
    Pauli feed_pauli = Pauli::I;
    int gadget = -1;
};

struct Census {
    int bell_preps_type_I = 0;
    int gadgets_type_II = 0;  // in-cell links
    int neighbor_gadgets = 0;
    int readouts_type_III = 0;
    int events = 0;
};

struct UnitCellCircuit {
    UnitCellConfig config;
    std::vector<Event> events;
    Census census;
};

// Throws std::invalid_argument for negative counts, more than six readouts or
// more initial pairs than faces.
UnitCellCircuit build_unit_cell_circuit(const UnitCellConfig &config = {});

enum class SourceType { bell_prep, memory_step, one_qubit_gate, two_qubit_gate, measurement };
std::string to_string(SourceType s);

// Symbolic linear combination c_eps * eps + c_dec * T/tau_D + c_depol * (1 - delta).
struct Coefficients {
    Rational eps{0};
    Rational decoherence{0};
    Rational depol{0};

    Coefficients &operator+=(const Coefficients &o);
    bool operator==(const Coefficients &) const = default;
};
Coefficients operator*(const Rational &k, const Coefficients &c);
Coefficients operator+(Coefficients a, const Coefficients &b);
std::string to_string(const Coefficients &c);

struct ErrorLocation {
    SourceType source = SourceType::memory_step;
    ErrorType group = ErrorType::type_I;
    int event_index = 0;
    std::vector<QubitId> qubits;
    // Propagation starts at this event: the one after a gate, or the
    // measurement itself for errors that precede a measurement.
    int suffix_begin = 0;
    // Weight of each Pauli in the source's set.
    Coefficients per_pauli;
};

std::vector<ErrorLocation> error_locations(const UnitCellCircuit &circuit);

struct LocationResult {
    ErrorLocation location;
    // Total weight of the Paulis that flip the check: the source's p_E.
    Coefficients p_flip;
    std::vector<std::string> flipping_paulis;
};

struct CoefficientVector {
    Coefficients type_I;
    Coefficients type_II;
    Coefficients type_III;

    Coefficients total() const { return type_I + type_II + type_III; }
    const Coefficients &of(ErrorType t) const;
};

struct Enumeration {
    std::vector<LocationResult> locations;
    // Linear coefficients of 1 - <K>: twice the summed p_E per type.
    CoefficientVector coefficients;
};

// Pushes the given Pauli through events [begin, end) of the circuit.
PauliString propagate_suffix(const UnitCellCircuit &circuit, PauliString p, int begin);

Enumeration enumerate_first_order(const UnitCellCircuit &circuit);

namespace serial {
Enumeration enumerate_first_order(const UnitCellCircuit &circuit);
}

struct Rates {
    double eps = 0;
    double t_over_tauD = 0;
    double one_minus_delta = 0;
};

double evaluate(const Coefficients &c, const Rates &r);

struct StabilizerExpectation {
    double product = 1;
    double linear = 1;
    std::vector<std::string> warnings;
};

// Exact product prod(1 - 2 p_E) and its first-order form.
StabilizerExpectation stabilizer_expectation(const std::vector<double> &p_sources);
StabilizerExpectation stabilizer_expectation(const Enumeration &e, const Rates &r);

struct ThresholdInequality {
    Rational a;    // coefficient of T/tau_D
    Rational b;    // coefficient of (1 - sqrt(beta1))
    Rational rhs;  // (1 - floor) / c_eps

    bool operator==(const ThresholdInequality &) const = default;
};

// Throws std::invalid_argument when c_eps is zero.
ThresholdInequality derive_threshold_inequality(const Coefficients &total, const Rational &floor);

// Closed-form accounting per type for an arbitrary structure, built from the
// per-gadget Pauli census.
CoefficientVector expected_coefficients(const UnitCellConfig &config);

// Target totals for the default structure.
CoefficientVector reference_coefficients();

struct AuditDiscrepancy {
    ErrorType group;
    Coefficients expected;
    Coefficients found;
    std::vector<LocationResult> trace;
};

struct AppendixAudit {
    UnitCellConfig config;
    Rational floor;
    Enumeration enumeration;
    CoefficientVector expected;
    // Empty when the structure has no eps term to normalize by.
    std::optional<ThresholdInequality> inequality;
    std::optional<ThresholdInequality> expected_inequality;
    std::vector<AuditDiscrepancy> discrepancies;
    bool inequality_matches = false;
    bool ok = false;
};

AppendixAudit audit_appendix(const UnitCellConfig &config, const Rational &floor);

// Hierarchical text report of an audit.
std::string audit_report_json(const AppendixAudit &audit);

}  // namespace ionlattice
