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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "ionlattice/pauli.h"

using namespace ionlattice;

namespace {

using Dense = Eigen::MatrixXcd;

Dense single(Pauli p) {
    const std::complex<double> i(0, 1);
    Dense m(2, 2);
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -i, i, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Dense kron(const Dense &a, const Dense &b) {
    Dense r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return r;
}

Dense dense(const PauliString &p, const std::vector<QubitId> &order) {
    Dense r = Dense::Identity(1, 1);
    for (const auto &q : order) {
        r = kron(r, single(p.get(q)));
    }
    return r;
}

// CNOT on an n-qubit register, qubit 0 most significant.
Dense cnot_matrix(int n, int control, int target) {
    const int dim = 1 << n;
    Dense u = Dense::Zero(dim, dim);
    for (int s = 0; s < dim; ++s) {
        int out = s;
        if (s >> (n - 1 - control) & 1) {
            out ^= 1 << (n - 1 - target);
        }
        u(out, s) = 1;
    }
    return u;
}

// a equals b up to a global phase in {+1, -1, +i, -i}.
bool equal_up_to_phase(const Dense &a, const Dense &b) {
    for (std::complex<double> ph : {std::complex<double>(1, 0), {-1, 0}, {0, 1}, {0, -1}}) {
        if ((a - ph * b).norm() < 1e-12) {
            return true;
        }
    }
    return false;
}

PauliString random_string(std::mt19937_64 &rng, const std::vector<QubitId> &qubits) {
    PauliString p;
    for (const auto &q : qubits) {
        p.set(q, static_cast<Pauli>(rng() % 4));
    }
    return p;
}

const QubitId A = face(0);
const QubitId B{QubitRole::edge, 0, CellTag::this_cell};
const QubitId C{QubitRole::bell_ancilla_face, 0, CellTag::this_cell};

}  // namespace

TEST(PauliString, IdentityNeverStored) {
    PauliString p;
    p.set(A, Pauli::I);
    EXPECT_TRUE(p.is_identity());
    p.apply(A, Pauli::X);
    p.apply(A, Pauli::X);
    EXPECT_EQ(p.weight(), 0u);
    p.apply(A, Pauli::X);
    p.apply(A, Pauli::Z);
    EXPECT_EQ(p.get(A), Pauli::Y);
}

TEST(Cnot, PropagationExamples) {
    EXPECT_EQ(cnot_propagate(PauliString{{A, Pauli::X}}, A, B), (PauliString{{A, Pauli::X}, {B, Pauli::X}}));
    EXPECT_EQ(cnot_propagate(PauliString{{A, Pauli::Z}}, A, B), (PauliString{{A, Pauli::Z}}));
    EXPECT_EQ(cnot_propagate(PauliString{{B, Pauli::Y}}, A, B), (PauliString{{A, Pauli::Z}, {B, Pauli::Y}}));
    EXPECT_EQ(cnot_propagate(PauliString{{B, Pauli::X}}, A, B), (PauliString{{B, Pauli::X}}));
    EXPECT_THROW(cnot_propagate(PauliString{}, A, A), std::invalid_argument);
}

TEST(Cnot, MatchesMatrixConjugation) {
    const std::vector<QubitId> order{A, B, C};
    const int pairs[][2] = {{0, 1}, {1, 0}, {0, 2}, {2, 1}};
    for (auto [c, t] : pairs) {
        Dense u = cnot_matrix(3, c, t);
        for (int code = 0; code < 64; ++code) {
            PauliString p;
            p.set(A, static_cast<Pauli>(code & 3));
            p.set(B, static_cast<Pauli>(code >> 2 & 3));
            p.set(C, static_cast<Pauli>(code >> 4 & 3));
            PauliString q = cnot_propagate(p, order[c], order[t]);
            EXPECT_TRUE(equal_up_to_phase(u * dense(p, order) * u.adjoint(), dense(q, order)))
                << to_string(p) << " -> " << to_string(q);
        }
    }
}

TEST(Cnot, SelfInverse) {
    std::mt19937_64 rng(1);
    std::vector<QubitId> qs{A, B, C, face(3)};
    for (int i = 0; i < 500; ++i) {
        auto p = random_string(rng, qs);
        int c = static_cast<int>(rng() % 4);
        int t = (c + 1 + static_cast<int>(rng() % 3)) % 4;
        EXPECT_EQ(cnot_propagate(cnot_propagate(p, qs[c], qs[t]), qs[c], qs[t]), p);
    }
}

TEST(CheckParity, Examples) {
    auto faces = cell_faces();
    EXPECT_TRUE(flips_check_parity(PauliString{{face(2), Pauli::Z}}, faces));
    EXPECT_FALSE(flips_check_parity(PauliString{{face(2), Pauli::Z}, {face(4), Pauli::Z}}, faces));
    EXPECT_FALSE(flips_check_parity(PauliString{{face(1), Pauli::X}}, faces));
    EXPECT_TRUE(flips_check_parity(PauliString{{face(1), Pauli::Y}}, faces));
    EXPECT_FALSE(flips_check_parity(PauliString{{face(1, CellTag::neighbor), Pauli::Z}}, faces));
}

TEST(CheckParity, AgreesWithMatrixCommutator) {
    std::mt19937_64 rng(9);
    auto faces = cell_faces();
    std::vector<QubitId> order(faces.begin(), faces.end());
    order.push_back(B);
    order.push_back(face(0, CellTag::neighbor));
    PauliString check;
    for (const auto &f : faces) {
        check.set(f, Pauli::X);
    }
    Dense K = dense(check, order);
    for (int i = 0; i < 150; ++i) {
        auto p = random_string(rng, order);
        Dense P = dense(p, order);
        bool anticommutes = (P * K + K * P).norm() < 1e-9;
        EXPECT_EQ(flips_check_parity(p, faces), anticommutes) << to_string(p);
    }
}

TEST(BellClasses, TableCounts) {
    int counts[3] = {0, 0, 0};
    for (const auto &e : bell_class_table()) {
        ++counts[static_cast<int>(e.cls)];
    }
    EXPECT_EQ(counts[static_cast<int>(BellClass::I)], 3);
    EXPECT_EQ(counts[static_cast<int>(BellClass::Z)], 8);
    EXPECT_EQ(counts[static_cast<int>(BellClass::X)], 4);
}

TEST(BellClasses, ActionOnABellPairMatchesRepresentative) {
    // (|01> + |10>)/sqrt2 with the partner as qubit 0 and the anchor as qubit 1.
    // Y-equivalent errors flip the X parity and are grouped with Z.
    Eigen::VectorXcd psi(4);
    psi << 0, 1, 1, 0;
    psi /= std::sqrt(2.0);
    for (const auto &e : bell_class_table()) {
        Eigen::VectorXcd acted = kron(single(e.partner), single(e.anchor)) * psi;
        int matches = 0;
        for (Pauli q : {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y}) {
            if (!equal_up_to_phase(acted, kron(single(Pauli::I), single(q)) * psi)) {
                continue;
            }
            ++matches;
            BellClass want = has_z(q) ? BellClass::Z : q == Pauli::X ? BellClass::X : BellClass::I;
            EXPECT_EQ(e.cls, want) << pauli_char(e.partner) << pauli_char(e.anchor);
        }
        EXPECT_EQ(matches, 1) << pauli_char(e.partner) << pauli_char(e.anchor);
    }
}

TEST(BellClasses, FoldReplacesPairPart) {
    PauliString p{{B, Pauli::Z}, {A, Pauli::X}, {C, Pauli::Y}};
    fold_bell_pair(p, A, B);
    EXPECT_EQ(p, (PauliString{{A, Pauli::Z}, {C, Pauli::Y}}));
    PauliString q{{B, Pauli::X}, {A, Pauli::X}};
    fold_bell_pair(q, A, B);
    EXPECT_TRUE(q.is_identity());
}
