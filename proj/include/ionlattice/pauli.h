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
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ionlattice {

// Bit 0 is the X part, bit 1 the Z part.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline Pauli pauli_product(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool has_x(Pauli p) {
    return (static_cast<std::uint8_t>(p) & 1) != 0;
}
inline bool has_z(Pauli p) {
    return (static_cast<std::uint8_t>(p) & 2) != 0;
}
inline bool anticommute(Pauli a, Pauli b) {
    return ((has_x(a) && has_z(b)) != (has_z(a) && has_x(b)));
}
char pauli_char(Pauli p);

enum class QubitRole : std::uint8_t { face, edge, bell_ancilla_face, bell_ancilla_edge };
enum class CellTag : std::uint8_t { this_cell, neighbor };

struct QubitId {
    QubitRole role = QubitRole::face;
    int index = 0;
    CellTag cell = CellTag::this_cell;

    auto operator<=>(const QubitId &) const = default;
};

std::string to_string(const QubitId &q);

inline QubitId face(int index, CellTag cell = CellTag::this_cell) {
    return {QubitRole::face, index, cell};
}

// The six faces of the cell; the check operator is X on each of them.
std::array<QubitId, 6> cell_faces();

// Sparse Pauli operator, phase dropped. Identity entries are never stored.
class PauliString {
   public:
    PauliString() = default;
    PauliString(std::initializer_list<std::pair<const QubitId, Pauli>> entries);

    Pauli get(const QubitId &q) const;
    void set(const QubitId &q, Pauli p);
    // Left-multiplies p onto qubit q.
    void apply(const QubitId &q, Pauli p);
    void erase(const QubitId &q) { terms_.erase(q); }
    PauliString &operator*=(const PauliString &other);

    size_t weight() const { return terms_.size(); }
    bool is_identity() const { return terms_.empty(); }
    const std::map<QubitId, Pauli> &terms() const { return terms_; }

    bool operator==(const PauliString &) const = default;

   private:
    std::map<QubitId, Pauli> terms_;
};

std::string to_string(const PauliString &p);

// Conjugation by CNOT: X_c -> X_c X_t, Z_t -> Z_c Z_t, X_t and Z_c unchanged.
PauliString cnot_propagate(PauliString p, const QubitId &control, const QubitId &target);

// True when the string anticommutes with the X-type check on `faces`, i.e. it
// has a Z or Y on an odd number of them.
bool flips_check_parity(const PauliString &p, const std::array<QubitId, 6> &faces);

// Two-qubit errors on an untouched Bell pair are equivalent to one of three
// errors on a single member: nothing, Z, or X.
enum class BellClass { I, Z, X };

struct BellClassEntry {
    Pauli partner;
    Pauli anchor;
    BellClass cls;
};

// All 15 non-identity (partner, anchor) Paulis with their class.
const std::array<BellClassEntry, 15> &bell_class_table();

BellClass bell_class(Pauli partner, Pauli anchor);

// Replaces the pair's part of the string by the class representative on the
// anchor qubit.
void fold_bell_pair(PauliString &p, const QubitId &anchor, const QubitId &partner);

}  // namespace ionlattice
