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

#include "ionlattice/pauli.h"

#include <stdexcept>

namespace ionlattice {

char pauli_char(Pauli p) {
    return "IXZY"[static_cast<int>(p)];
}

std::string to_string(const QubitId &q) {
    std::string s;
    switch (q.role) {
        case QubitRole::face:
            s = "f";
            break;
        case QubitRole::edge:
            s = "e";
            break;
        case QubitRole::bell_ancilla_face:
            s = "f'";
            break;
        case QubitRole::bell_ancilla_edge:
            s = "e'";
            break;
    }
    s += std::to_string(q.index);
    if (q.cell == CellTag::neighbor) {
        s += "@nb";
    }
    return s;
}

std::array<QubitId, 6> cell_faces() {
    std::array<QubitId, 6> faces;
    for (int k = 0; k < 6; ++k) {
        faces[k] = face(k);
    }
    return faces;
}

PauliString::PauliString(std::initializer_list<std::pair<const QubitId, Pauli>> entries) {
    for (const auto &[q, p] : entries) {
        apply(q, p);
    }
}

Pauli PauliString::get(const QubitId &q) const {
    auto it = terms_.find(q);
    return it == terms_.end() ? Pauli::I : it->second;
}

void PauliString::set(const QubitId &q, Pauli p) {
    if (p == Pauli::I) {
        terms_.erase(q);
    } else {
        terms_[q] = p;
    }
}

void PauliString::apply(const QubitId &q, Pauli p) {
    set(q, pauli_product(get(q), p));
}

PauliString &PauliString::operator*=(const PauliString &other) {
    for (const auto &[q, p] : other.terms_) {
        apply(q, p);
    }
    return *this;
}

std::string to_string(const PauliString &p) {
    if (p.is_identity()) {
        return "I";
    }
    std::string s;
    for (const auto &[q, op] : p.terms()) {
        if (!s.empty()) {
            s += ' ';
        }
        s += pauli_char(op);
        s += '_';
        s += to_string(q);
    }
    return s;
}

PauliString cnot_propagate(PauliString p, const QubitId &control, const QubitId &target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    Pauli c = p.get(control);
    Pauli t = p.get(target);
    if (has_x(c)) {
        p.apply(target, Pauli::X);
    }
    if (has_z(t)) {
        p.apply(control, Pauli::Z);
    }
    return p;
}

bool flips_check_parity(const PauliString &p, const std::array<QubitId, 6> &faces) {
    bool odd = false;
    for (const auto &f : faces) {
        odd ^= has_z(p.get(f));
    }
    return odd;
}

namespace {

std::array<BellClassEntry, 15> build_table() {
    // Pauli pairs that fix the pair act trivially; anything anticommuting with
    // XX looks like a Z on one member, the rest like an X.
    std::array<BellClassEntry, 15> table{};
    int k = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) {
                continue;
            }
            auto partner = static_cast<Pauli>(a);
            auto anchor = static_cast<Pauli>(b);
            BellClass cls;
            if (partner == anchor) {
                cls = BellClass::I;
            } else if (has_z(partner) != has_z(anchor)) {
                cls = BellClass::Z;
            } else {
                cls = BellClass::X;
            }
            table[k++] = {partner, anchor, cls};
        }
    }
    return table;
}

}  // namespace

const std::array<BellClassEntry, 15> &bell_class_table() {
    static const auto table = build_table();
    return table;
}

BellClass bell_class(Pauli partner, Pauli anchor) {
    if (partner == Pauli::I && anchor == Pauli::I) {
        return BellClass::I;
    }
    for (const auto &e : bell_class_table()) {
        if (e.partner == partner && e.anchor == anchor) {
            return e.cls;
        }
    }
    throw std::logic_error("bell class table is incomplete");
}

void fold_bell_pair(PauliString &p, const QubitId &anchor, const QubitId &partner) {
    BellClass cls = bell_class(p.get(partner), p.get(anchor));
    p.erase(partner);
    p.erase(anchor);
    if (cls == BellClass::Z) {
        p.set(anchor, Pauli::Z);
    } else if (cls == BellClass::X) {
        p.set(anchor, Pauli::X);
    }
}

}  // namespace ionlattice
