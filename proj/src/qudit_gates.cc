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

#include "metaplectic/qudit_gates.h"

#include <cmath>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace metaplectic {

namespace {

struct KindInfo {
    GateKind kind;
    const char *name;
    size_t n_params;
};

constexpr KindInfo kKinds[] = {
    {GateKind::kH, "H", 0},   {GateKind::kSUM, "SUM", 0}, {GateKind::kQ, "Q", 1},       {GateKind::kP, "P", 1},
    {GateKind::kX, "X", 0},   {GateKind::kZ, "Z", 0},     {GateKind::kCZ, "CZ", 0},     {GateKind::kFLIP, "FLIP", 1},
    {GateKind::kM, "M", 1},   {GateKind::kR, "R", 3},
};

const KindInfo &info(GateKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw std::logic_error("unknown gate kind");
}

Matrix diagonal(const std::vector<Complex> &entries) {
    auto n = static_cast<Eigen::Index>(entries.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        m(i, i) = entries[static_cast<size_t>(i)];
    }
    return m;
}

Matrix permutation(int d, long long mult, long long shift) {
    Matrix m = Matrix::Zero(d, d);
    for (long long i = 0; i < d; i++) {
        long long t = ((mult * i + shift) % d + d) % d;
        m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(i)) = 1;
    }
    return m;
}

}  // namespace

void validate(const GateSpec &spec) {
    const auto &k = info(spec.kind);
    std::string name = k.name;
    if (spec.d < 2) {
        throw std::invalid_argument(name + ": dimension must be at least 2");
    }
    if (spec.params.size() != k.n_params) {
        throw std::invalid_argument(name + ": expected " + std::to_string(k.n_params) + " parameter(s)");
    }
    switch (spec.kind) {
        case GateKind::kQ:
        case GateKind::kP:
        case GateKind::kFLIP:
            if (spec.params[0] < 0 || spec.params[0] >= spec.d) {
                throw std::invalid_argument(name + ": index " + std::to_string(spec.params[0]) + " out of range");
            }
            break;
        case GateKind::kM:
            if (std::gcd(spec.params[0], spec.d) != 1) {
                throw std::invalid_argument("M: gcd(k, d) must be 1");
            }
            break;
        case GateKind::kR: {
            int i = spec.params[0];
            int j = spec.params[1];
            if (i < 1 || i > spec.d || j < 1 || j > spec.d) {
                throw std::invalid_argument("R: indices are 1-based and must lie in 1..d");
            }
            if (i == j) {
                throw std::invalid_argument("R: needs i != j");
            }
            break;
        }
        default:
            break;
    }
}

Unitary hadamard(int d) {
    Matrix m(d, d);
    double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            m(i, j) = s * root_of_unity(d, static_cast<long long>(i) * j);
        }
    }
    return m;
}

Unitary sum_gate(int d) {
    Matrix m = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            m(i * d + (i + j) % d, i * d + j) = 1;
        }
    }
    return m;
}

Unitary q_gate(int d, int i) {
    std::vector<Complex> e(static_cast<size_t>(d), 1.0);
    e[static_cast<size_t>(i)] = root_of_unity(d);
    return diagonal(e);
}

Unitary p_gate(int d, int i) {
    std::vector<Complex> e(static_cast<size_t>(d), 1.0);
    e[static_cast<size_t>(i)] = -root_of_unity(d, 2);
    return diagonal(e);
}

Unitary x_gate(int d) {
    return permutation(d, 1, 1);
}

Unitary z_gate(int d) {
    std::vector<Complex> e;
    for (int i = 0; i < d; i++) {
        e.push_back(root_of_unity(d, i));
    }
    return diagonal(e);
}

Unitary cz_gate(int d) {
    std::vector<Complex> e;
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            e.push_back(root_of_unity(d, static_cast<long long>(i) * j));
        }
    }
    return diagonal(e);
}

Unitary flip_gate(int d, int i) {
    std::vector<Complex> e(static_cast<size_t>(d), 1.0);
    e[static_cast<size_t>(i)] = -1.0;
    return diagonal(e);
}

Unitary mult_gate(int d, int k) {
    return permutation(d, k, 0);
}

Unitary r_gate(int d, int i, int j, int k) {
    std::vector<Complex> e(static_cast<size_t>(d), 1.0);
    e[static_cast<size_t>(i - 1)] = root_of_unity(d, k);
    e[static_cast<size_t>(j - 1)] = root_of_unity(d, -static_cast<long long>(k));
    return diagonal(e);
}

Unitary make_gate(const GateSpec &spec) {
    validate(spec);
    int d = spec.d;
    const auto &p = spec.params;
    switch (spec.kind) {
        case GateKind::kH:
            return hadamard(d);
        case GateKind::kSUM:
            return sum_gate(d);
        case GateKind::kQ:
            return q_gate(d, p[0]);
        case GateKind::kP:
            return p_gate(d, p[0]);
        case GateKind::kX:
            return x_gate(d);
        case GateKind::kZ:
            return z_gate(d);
        case GateKind::kCZ:
            return cz_gate(d);
        case GateKind::kFLIP:
            return flip_gate(d, p[0]);
        case GateKind::kM:
            return mult_gate(d, p[0]);
        case GateKind::kR:
            return r_gate(d, p[0], p[1], p[2]);
    }
    throw std::logic_error("unreachable gate kind");
}

GateSpec parse_gate_name(std::string_view name) {
    static const std::regex re(R"(^(SUM|FLIP|CZ|H|Q|P|X|Z|M|R)([0-9]+)(?:\[([-0-9, ]*)\])?$)");
    std::string text(name);
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw std::invalid_argument("unrecognized gate name '" + text + "'");
    }
    GateSpec spec;
    for (const auto &k : kKinds) {
        if (m[1] == k.name) {
            spec.kind = k.kind;
        }
    }
    spec.d = std::stoi(m[2]);
    if (m[3].matched) {
        std::string list = m[3];
        std::regex num(R"(-?[0-9]+)");
        for (auto it = std::sregex_iterator(list.begin(), list.end(), num); it != std::sregex_iterator(); ++it) {
            spec.params.push_back(std::stoi(it->str()));
        }
    }
    validate(spec);
    return spec;
}

std::string gate_name(const GateSpec &spec) {
    std::string out = info(spec.kind).name + std::to_string(spec.d);
    if (!spec.params.empty()) {
        out += "[";
        for (size_t i = 0; i < spec.params.size(); i++) {
            out += (i ? "," : "") + std::to_string(spec.params[i]);
        }
        out += "]";
    }
    return out;
}

}  // namespace metaplectic
