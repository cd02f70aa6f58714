// Copyright 2026 The Metaplectic Authors
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

#ifndef METAPLECTIC_QUDIT_GATES_H
#define METAPLECTIC_QUDIT_GATES_H

#include <string>
#include <string_view>
#include <vector>

#include "metaplectic/linalg.h"

namespace metaplectic {

enum class GateKind { kH, kSUM, kQ, kP, kX, kZ, kCZ, kFLIP, kM, kR };

/// A named qudit gate. Computational basis |0>..|d-1>; two-qudit gates act on
/// |i,j> at index i*d + j with the first factor as control.
///
/// params: Q, P, FLIP take {i} with 0 <= i < d; M takes {k} with gcd(k, d) = 1;
/// R takes {i, j, k} with 1 <= i, j <= d, i != j, giving (Q[i-1] Q[j-1]^-1)^k.
struct GateSpec {
    GateKind kind = GateKind::kH;
    int d = 2;
    std::vector<int> params;
};

/// Throws std::invalid_argument when the spec is out of range.
void validate(const GateSpec &spec);

/// Exact matrix of the gate; d x d, or d^2 x d^2 for SUM and CZ.
Unitary make_gate(const GateSpec &spec);

/// "H3", "SUM3", "Q3[1]", "P3[2]", "X5", "Z5", "CZ3", "FLIP3[2]", "M5[2]", "R5[1,2,3]".
GateSpec parse_gate_name(std::string_view name);
std::string gate_name(const GateSpec &spec);

inline Unitary make_gate(std::string_view name) {
    return make_gate(parse_gate_name(name));
}

// Shorthands.
Unitary hadamard(int d);
Unitary sum_gate(int d);
Unitary q_gate(int d, int i);
Unitary p_gate(int d, int i);
Unitary x_gate(int d);
Unitary z_gate(int d);
Unitary cz_gate(int d);
Unitary flip_gate(int d, int i);
Unitary mult_gate(int d, int k);
Unitary r_gate(int d, int i, int j, int k);

}  // namespace metaplectic

#endif
