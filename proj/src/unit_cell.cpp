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

#include "ionlattice/unit_cell.h"

#include "json.hpp"
#include <stdexcept>

#include "ionlattice/parallel.h"

namespace ionlattice {

bool UnitCellConfig::is_default() const {
    return *this == UnitCellConfig{};
}

std::string to_string(ErrorType t) {
    switch (t) {
        case ErrorType::type_I:
            return "I";
        case ErrorType::type_II:
            return "II";
        case ErrorType::type_III:
            return "III";
    }
    return "?";
}

std::string to_string(SourceType s) {
    switch (s) {
        case SourceType::bell_prep:
            return "bell_prep";
        case SourceType::memory_step:
            return "memory_step";
        case SourceType::one_qubit_gate:
            return "one_qubit_gate";
        case SourceType::two_qubit_gate:
            return "two_qubit_gate";
        case SourceType::measurement:
            return "measurement";
    }
    return "?";
}

namespace {

struct Link {
    QubitId face_qubit;
    std::vector<QubitId> downstream;
};

Event simple(EventKind kind, ErrorType group, std::vector<QubitId> qubits, Basis basis = Basis::Z) {
    Event e;
    e.kind = kind;
    e.group = group;
    e.qubits = std::move(qubits);
    e.basis = basis;
    return e;
}

void check_config(const UnitCellConfig &c) {
    auto fail = [](const std::string &m) { throw std::invalid_argument("inconsistent unit-cell structure: " + m); };
    if (c.initial_pairs < 0 || c.in_cell_links < 0 || c.neighbor_odd_links < 0 || c.neighbor_even_links < 0 ||
        c.measured_faces < 0) {
        fail("counts must be >= 0");
    }
    if (c.measured_faces > 6) {
        fail("a cell has only 6 faces to measure");
    }
    if (c.initial_pairs > 6) {
        fail("each initial pair needs its own face, at most 6");
    }
}

}  // namespace

UnitCellCircuit build_unit_cell_circuit(const UnitCellConfig &config) {
    check_config(config);
    UnitCellCircuit circuit;
    circuit.config = config;
    auto &ev = circuit.events;
    int next_edge = 0;

    for (int i = 0; i < config.initial_pairs; ++i) {
        QubitId f = face(i);
        QubitId e{QubitRole::edge, next_edge++, CellTag::this_cell};
        ev.push_back(simple(EventKind::bell_prep, ErrorType::type_I, {f, e}));
        ev.push_back(simple(EventKind::memory, ErrorType::type_I, {f, e}));
        ev.push_back(simple(EventKind::fold, ErrorType::type_I, {f, e}));
        ++circuit.census.bell_preps_type_I;
    }

    std::vector<Link> links;
    for (int k = 0; k < config.in_cell_links; ++k) {
        links.push_back({face(k % 6), {face((k + 1) % 6)}});
    }
    int neighbor_face = 0;
    for (int k = 0; k < config.neighbor_odd_links; ++k) {
        links.push_back({face(neighbor_face++, CellTag::neighbor), {face(k % 6)}});
    }
    for (int k = 0; k < config.neighbor_even_links; ++k) {
        links.push_back({face(neighbor_face++, CellTag::neighbor), {face(k % 6), face((k + 1) % 6)}});
    }

    std::vector<std::pair<QubitId, QubitId>> fan_outs;
    for (size_t g = 0; g < links.size(); ++g) {
        const int gi = static_cast<int>(g);
        const QubitId f = links[g].face_qubit;
        const QubitId e{QubitRole::edge, next_edge++, CellTag::this_cell};
        const QubitId fa{QubitRole::bell_ancilla_face, gi, CellTag::this_cell};
        const QubitId ea{QubitRole::bell_ancilla_edge, gi, CellTag::this_cell};
        const auto II = ErrorType::type_II;
        ev.push_back({EventKind::bell_prep, II, {fa, ea}, Basis::Z, {}, Pauli::I, gi});
        ev.push_back({EventKind::memory, II, {f, e, fa, ea}, Basis::Z, {}, Pauli::I, gi});
        ev.push_back({EventKind::cnot, II, {f, fa}, Basis::Z, {}, Pauli::I, gi});
        ev.push_back({EventKind::cnot, II, {ea, e}, Basis::Z, {}, Pauli::I, gi});
        ev.push_back({EventKind::memory, II, {f, e, fa, ea}, Basis::Z, {}, Pauli::I, gi});
        ev.push_back({EventKind::measure, II, {fa}, Basis::Z, e, Pauli::X, gi});
        ev.push_back({EventKind::measure, II, {ea}, Basis::X, f, Pauli::Z, gi});
        for (const auto &d : links[g].downstream) {
            fan_outs.emplace_back(d, e);
        }
        if (g < static_cast<size_t>(config.in_cell_links)) {
            ++circuit.census.gadgets_type_II;
        } else {
            ++circuit.census.neighbor_gadgets;
        }
    }
    for (const auto &[control, target] : fan_outs) {
        ev.push_back(simple(EventKind::fan_out, ErrorType::type_II, {control, target}));
    }

    for (int i = 0; i < config.measured_faces; ++i) {
        ev.push_back(simple(EventKind::readout, ErrorType::type_III, {face(i)}, Basis::X));
        ++circuit.census.readouts_type_III;
    }
    circuit.census.events = static_cast<int>(ev.size());
    return circuit;
}

Coefficients &Coefficients::operator+=(const Coefficients &o) {
    eps += o.eps;
    decoherence += o.decoherence;
    depol += o.depol;
    return *this;
}

Coefficients operator*(const Rational &k, const Coefficients &c) {
    return {k * c.eps, k * c.decoherence, k * c.depol};
}

Coefficients operator+(Coefficients a, const Coefficients &b) {
    a += b;
    return a;
}

std::string to_string(const Coefficients &c) {
    return "(" + to_string(c.eps) + ", " + to_string(c.decoherence) + ", " + to_string(c.depol) + ")";
}

const Coefficients &CoefficientVector::of(ErrorType t) const {
    switch (t) {
        case ErrorType::type_I:
            return type_I;
        case ErrorType::type_II:
            return type_II;
        case ErrorType::type_III:
            break;
    }
    return type_III;
}

std::vector<ErrorLocation> error_locations(const UnitCellCircuit &circuit) {
    const Coefficients depol_weight{0, 0, Rational(1, 4)};
    const Coefficients idle_weight{0, Rational(1, 3), 0};
    const Coefficients gate2_weight{Rational(1, 15), 0, 0};
    const Coefficients meas_weight{Rational(1, 3), 0, 0};

    std::vector<ErrorLocation> out;
    for (size_t i = 0; i < circuit.events.size(); ++i) {
        const Event &e = circuit.events[i];
        const int idx = static_cast<int>(i);
        switch (e.kind) {
            case EventKind::bell_prep:
                for (const auto &q : e.qubits) {
                    out.push_back({SourceType::bell_prep, e.group, idx, {q}, idx + 1, depol_weight});
                }
                break;
            case EventKind::memory:
                for (const auto &q : e.qubits) {
                    out.push_back({SourceType::memory_step, e.group, idx, {q}, idx + 1, idle_weight});
                }
                break;
            case EventKind::cnot:
                out.push_back({SourceType::two_qubit_gate, e.group, idx, e.qubits, idx + 1, gate2_weight});
                break;
            case EventKind::measure:
            case EventKind::readout:
                out.push_back({SourceType::measurement, e.group, idx, e.qubits, idx, meas_weight});
                break;
            case EventKind::fan_out:
            case EventKind::fold:
                break;
        }
    }
    return out;
}

PauliString propagate_suffix(const UnitCellCircuit &circuit, PauliString p, int begin) {
    for (size_t i = static_cast<size_t>(begin); i < circuit.events.size(); ++i) {
        const Event &e = circuit.events[i];
        switch (e.kind) {
            case EventKind::cnot:
            case EventKind::fan_out:
                p = cnot_propagate(std::move(p), e.qubits[0], e.qubits[1]);
                break;
            case EventKind::measure: {
                const QubitId &q = e.qubits[0];
                Pauli here = p.get(q);
                bool flipped = e.basis == Basis::Z ? has_x(here) : has_z(here);
                if (flipped && e.feed_target) {
                    p.apply(*e.feed_target, e.feed_pauli);
                }
                p.erase(q);
                break;
            }
            case EventKind::fold:
                fold_bell_pair(p, e.qubits[0], e.qubits[1]);
                break;
            case EventKind::bell_prep:
            case EventKind::memory:
            case EventKind::readout:
                break;
        }
    }
    return p;
}

namespace {

const std::array<Pauli, 3> kNonIdentity{Pauli::X, Pauli::Y, Pauli::Z};

LocationResult analyse(const UnitCellCircuit &circuit, const ErrorLocation &loc) {
    static const auto faces = cell_faces();
    LocationResult r;
    r.location = loc;
    std::vector<PauliString> candidates;
    if (loc.qubits.size() == 1) {
        for (Pauli a : kNonIdentity) {
            candidates.push_back(PauliString{{loc.qubits[0], a}});
        }
    } else {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                if (a == 0 && b == 0) {
                    continue;
                }
                PauliString s;
                s.set(loc.qubits[0], static_cast<Pauli>(a));
                s.set(loc.qubits[1], static_cast<Pauli>(b));
                candidates.push_back(s);
            }
        }
    }
    for (const auto &c : candidates) {
        if (flips_check_parity(propagate_suffix(circuit, c, loc.suffix_begin), faces)) {
            r.p_flip += loc.per_pauli;
            r.flipping_paulis.push_back(to_string(c));
        }
    }
    return r;
}

Enumeration aggregate(std::vector<LocationResult> results) {
    Enumeration e;
    for (const auto &r : results) {
        Coefficients twice = Rational(2) * r.p_flip;
        switch (r.location.group) {
            case ErrorType::type_I:
                e.coefficients.type_I += twice;
                break;
            case ErrorType::type_II:
                e.coefficients.type_II += twice;
                break;
            case ErrorType::type_III:
                e.coefficients.type_III += twice;
                break;
        }
    }
    e.locations = std::move(results);
    return e;
}

}  // namespace

Enumeration enumerate_first_order(const UnitCellCircuit &circuit) {
    const auto locs = error_locations(circuit);
    std::vector<LocationResult> results(locs.size());
    parallel_for(static_cast<std::int64_t>(locs.size()),
                 [&](std::int64_t k) { results[k] = analyse(circuit, locs[k]); });
    return aggregate(std::move(results));
}

namespace serial {

Enumeration enumerate_first_order(const UnitCellCircuit &circuit) {
    std::vector<LocationResult> results;
    for (const auto &loc : error_locations(circuit)) {
        results.push_back(analyse(circuit, loc));
    }
    return aggregate(std::move(results));
}

}  // namespace serial

double evaluate(const Coefficients &c, const Rates &r) {
    return to_double(c.eps) * r.eps + to_double(c.decoherence) * r.t_over_tauD +
           to_double(c.depol) * r.one_minus_delta;
}

StabilizerExpectation stabilizer_expectation(const std::vector<double> &p_sources) {
    StabilizerExpectation s;
    double sum = 0;
    for (double p : p_sources) {
        if (p >= 0.5) {
            s.warnings.push_back("source probability " + std::to_string(p) +
                                 " >= 1/2; the sign of the expectation is no longer meaningful");
        }
        s.product *= 1.0 - 2.0 * p;
        sum += p;
    }
    s.linear = 1.0 - 2.0 * sum;
    return s;
}

StabilizerExpectation stabilizer_expectation(const Enumeration &e, const Rates &r) {
    std::vector<double> ps;
    ps.reserve(e.locations.size());
    for (const auto &l : e.locations) {
        ps.push_back(evaluate(l.p_flip, r));
    }
    return stabilizer_expectation(ps);
}

ThresholdInequality derive_threshold_inequality(const Coefficients &total, const Rational &floor) {
    if (total.eps == Rational(0)) {
        throw std::invalid_argument("cannot normalize the inequality: eps coefficient is zero");
    }
    return {total.decoherence / total.eps, total.depol / total.eps, (Rational(1) - floor) / total.eps};
}

CoefficientVector expected_coefficients(const UnitCellConfig &c) {
    // Per pair: Z/Y on either member at prep (1-delta) and in one idle round.
    const Coefficients pair{0, Rational(8, 3), 2};
    // Per in-cell link: twice (p_ZI + p_IZ) of the gadget.
    const Coefficients in_cell{Rational(52, 15), 8, 2};
    // Per odd neighbor link: twice (p_IZ + p_ZZ).
    const Coefficients neighbor_odd{Rational(16, 15), Rational(8, 3), 0};
    const Coefficients readout{Rational(4, 3), 0, 0};
    CoefficientVector v;
    v.type_I = Rational(c.initial_pairs) * pair;
    v.type_II = Rational(c.in_cell_links) * in_cell + Rational(c.neighbor_odd_links) * neighbor_odd;
    v.type_III = Rational(c.measured_faces) * readout;
    return v;
}

CoefficientVector reference_coefficients() {
    CoefficientVector v;
    v.type_I = {0, 8, 6};
    v.type_II = {Rational(1032, 15), 160, 36};
    v.type_III = {8, 0, 0};
    return v;
}

AppendixAudit audit_appendix(const UnitCellConfig &config, const Rational &floor) {
    AppendixAudit a;
    a.config = config;
    a.floor = floor;
    a.enumeration = enumerate_first_order(build_unit_cell_circuit(config));
    a.expected = config.is_default() ? reference_coefficients() : expected_coefficients(config);

    for (ErrorType t : {ErrorType::type_I, ErrorType::type_II, ErrorType::type_III}) {
        const auto &found = a.enumeration.coefficients.of(t);
        const auto &want = a.expected.of(t);
        if (found == want) {
            continue;
        }
        AuditDiscrepancy d{t, want, found, {}};
        for (const auto &l : a.enumeration.locations) {
            if (l.location.group == t && !(l.p_flip == Coefficients{})) {
                d.trace.push_back(l);
            }
        }
        a.discrepancies.push_back(std::move(d));
    }

    const Coefficients total = a.enumeration.coefficients.total();
    const Coefficients want_total = a.expected.total();
    if (total.eps != Rational(0)) {
        a.inequality = derive_threshold_inequality(total, floor);
    }
    if (want_total.eps != Rational(0)) {
        a.expected_inequality = derive_threshold_inequality(want_total, floor);
    }
    a.inequality_matches = a.inequality == a.expected_inequality;
    a.ok = a.discrepancies.empty() && a.inequality_matches;
    return a;
}

namespace {

nlohmann::ordered_json coeff_json(const Coefficients &c) {
    return {{"eps", to_string(c.eps)}, {"t_over_tauD", to_string(c.decoherence)}, {"one_minus_delta", to_string(c.depol)}};
}

nlohmann::ordered_json location_json(const LocationResult &l) {
    nlohmann::ordered_json q = nlohmann::ordered_json::array();
    for (const auto &id : l.location.qubits) {
        q.push_back(to_string(id));
    }
    return {{"event", l.location.event_index},
            {"source", to_string(l.location.source)},
            {"qubits", q},
            {"p_flip", coeff_json(l.p_flip)},
            {"flipping_paulis", l.flipping_paulis}};
}

nlohmann::ordered_json inequality_json(const std::optional<ThresholdInequality> &q) {
    if (!q) {
        return nullptr;
    }
    return {{"eps", "1"},
            {"t_over_tauD", to_string(q->a)},
            {"one_minus_sqrt_beta1", to_string(q->b)},
            {"rhs", to_string(q->rhs)},
            {"rhs_decimal", to_double(q->rhs)}};
}

}  // namespace

std::string audit_report_json(const AppendixAudit &a) {
    nlohmann::ordered_json j;
    j["structure"] = {{"initial_pairs", a.config.initial_pairs},
                      {"in_cell_links", a.config.in_cell_links},
                      {"neighbor_odd_links", a.config.neighbor_odd_links},
                      {"neighbor_even_links", a.config.neighbor_even_links},
                      {"measured_faces", a.config.measured_faces}};
    j["floor"] = to_string(a.floor);
    j["error_locations"] = a.enumeration.locations.size();
    nlohmann::ordered_json types;
    for (ErrorType t : {ErrorType::type_I, ErrorType::type_II, ErrorType::type_III}) {
        types[to_string(t)] = {{"found", coeff_json(a.enumeration.coefficients.of(t))},
                               {"expected", coeff_json(a.expected.of(t))}};
    }
    j["coefficients"] = types;
    j["total"] = {{"found", coeff_json(a.enumeration.coefficients.total())},
                  {"expected", coeff_json(a.expected.total())}};
    j["inequality"] = inequality_json(a.inequality);
    j["expected_inequality"] = inequality_json(a.expected_inequality);
    nlohmann::ordered_json disc = nlohmann::ordered_json::array();
    for (const auto &d : a.discrepancies) {
        nlohmann::ordered_json trace = nlohmann::ordered_json::array();
        for (const auto &l : d.trace) {
            trace.push_back(location_json(l));
        }
        disc.push_back({{"type", to_string(d.group)},
                        {"expected", coeff_json(d.expected)},
                        {"found", coeff_json(d.found)},
                        {"trace", trace}});
    }
    j["discrepancies"] = disc;
    j["verified"] = a.ok;
    return j.dump(2) + "\n";
}

}  // namespace ionlattice
