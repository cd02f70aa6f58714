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

#include "metaplectic/protocol_sim.h"

#include <cmath>
#include <stdexcept>

#include "metaplectic/qudit_gates.h"

namespace metaplectic {

MeasurementSpec MeasurementSpec::standard(int qudit) {
    return {Kind::kStandard, qudit, {}, {}};
}

namespace {

Matrix projector_of(const std::vector<Vector> &subspace) {
    if (subspace.empty()) {
        throw std::invalid_argument("projection needs at least one vector");
    }
    auto d = subspace[0].size();
    Matrix proj = Matrix::Zero(d, d);
    for (const auto &v : subspace) {
        if (v.size() != d) {
            throw std::invalid_argument("projection vectors differ in dimension");
        }
        proj += v * v.adjoint();
    }
    if (max_abs_diff(proj * proj, proj) > 1e-9) {
        throw std::invalid_argument("projection vectors are not orthonormal");
    }
    return proj;
}

}  // namespace

MeasurementSpec MeasurementSpec::project(int qudit, std::vector<Vector> subspace) {
    Matrix proj = projector_of(subspace);
    return {Kind::kProject, qudit, std::move(subspace), std::move(proj)};
}

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; i++) {
        r *= b;
    }
    return r;
}

}  // namespace

ProtocolState::ProtocolState(int d, int m, std::uint64_t seed) : d_(d), m_(m), rng_(seed) {
    if (d < 2 || m < 1) {
        throw std::invalid_argument("ProtocolState: need d >= 2 and m >= 1");
    }
    amps_ = Vector::Zero(ipow(d, m));
    amps_(0) = 1;
}

ProtocolState::ProtocolState(int d, int m, Vector amplitudes, std::uint64_t seed) : ProtocolState(d, m, seed) {
    set_amplitudes(std::move(amplitudes));
}

void ProtocolState::set_amplitudes(Vector amplitudes) {
    if (amplitudes.size() != amps_.size()) {
        throw std::invalid_argument("ProtocolState: amplitude vector has the wrong length");
    }
    if (std::abs(amplitudes.norm() - 1) > 1e-10) {
        throw std::invalid_argument("ProtocolState: amplitudes must have unit norm");
    }
    amps_ = std::move(amplitudes);
}

void ProtocolState::check_qudit(int q) const {
    if (q < 0 || q >= m_) {
        throw std::out_of_range("qudit index " + std::to_string(q) + " out of range");
    }
}

void ProtocolState::apply(const Matrix &gate, const std::vector<int> &qudits) {
    int k = static_cast<int>(qudits.size());
    long long block = ipow(d_, k);
    if (gate.rows() != block || gate.cols() != block) {
        throw std::invalid_argument("apply: gate dimension does not match the selected qudits");
    }
    std::vector<long long> stride;
    std::vector<bool> used(static_cast<size_t>(m_), false);
    for (int q : qudits) {
        check_qudit(q);
        if (used[static_cast<size_t>(q)]) {
            throw std::invalid_argument("apply: repeated qudit index");
        }
        used[static_cast<size_t>(q)] = true;
        stride.push_back(ipow(d_, m_ - 1 - q));
    }
    // Offsets of the gate's local basis states within the register.
    std::vector<long long> offset(static_cast<size_t>(block), 0);
    for (long long s = 0; s < block; s++) {
        long long rem = s;
        for (int j = k - 1; j >= 0; j--) {
            offset[static_cast<size_t>(s)] += (rem % d_) * stride[static_cast<size_t>(j)];
            rem /= d_;
        }
    }
    // Base indices: every digit of a selected qudit is zero.
    std::vector<long long> bases{0};
    for (int q = 0; q < m_; q++) {
        if (used[static_cast<size_t>(q)]) {
            continue;
        }
        long long st = ipow(d_, m_ - 1 - q);
        std::vector<long long> grown;
        grown.reserve(bases.size() * static_cast<size_t>(d_));
        for (long long b : bases) {
            for (int digit = 0; digit < d_; digit++) {
                grown.push_back(b + digit * st);
            }
        }
        bases = std::move(grown);
    }
    Vector local(block);
    for (long long base : bases) {
        for (long long s = 0; s < block; s++) {
            local(s) = amps_(base + offset[static_cast<size_t>(s)]);
        }
        Vector out = gate * local;
        for (long long s = 0; s < block; s++) {
            amps_(base + offset[static_cast<size_t>(s)]) = out(s);
        }
    }
}

Vector ProtocolState::branch(const MeasurementSpec &spec, int outcome) const {
    check_qudit(spec.qudit);
    long long stride = ipow(d_, m_ - 1 - spec.qudit);
    Vector out = Vector::Zero(amps_.size());
    if (spec.kind == MeasurementSpec::Kind::kStandard) {
        if (outcome < 0 || outcome >= d_) {
            throw std::out_of_range("standard measurement outcome out of range");
        }
        for (long long i = 0; i < amps_.size(); i++) {
            if ((i / stride) % d_ == outcome) {
                out(i) = amps_(i);
            }
        }
        return out;
    }
    if (outcome != 0 && outcome != 1) {
        throw std::out_of_range("projective measurement outcome must be 0 or 1");
    }
    Matrix fallback;
    if (spec.projector.size() == 0) {
        fallback = projector_of(spec.subspace);
    }
    const Matrix &proj = spec.projector.size() ? spec.projector : fallback;
    if (proj.rows() != d_) {
        throw std::invalid_argument("projection vector has the wrong dimension");
    }
    for (long long i = 0; i < amps_.size(); i++) {
        long long digit = (i / stride) % d_;
        long long base = i - digit * stride;
        Complex acc = 0;
        for (int j = 0; j < d_; j++) {
            acc += proj(digit, j) * amps_(base + j * stride);
        }
        out(i) = outcome == 0 ? acc : amps_(i) - acc;
    }
    return out;
}

std::vector<double> ProtocolState::probabilities(const MeasurementSpec &spec) const {
    int n = spec.kind == MeasurementSpec::Kind::kStandard ? d_ : 2;
    std::vector<double> out;
    for (int k = 0; k < n; k++) {
        out.push_back(branch(spec, k).squaredNorm());
    }
    return out;
}

MeasurementResult ProtocolState::measure(const MeasurementSpec &spec) {
    auto probs = probabilities(spec);
    double u = rng_.uniform();
    double acc = 0;
    int chosen = -1;
    for (size_t k = 0; k < probs.size(); k++) {
        if (probs[k] < 1e-12) {
            continue;
        }
        chosen = static_cast<int>(k);
        acc += probs[k];
        if (u < acc) {
            break;
        }
    }
    return postselect(spec, chosen);
}

MeasurementResult ProtocolState::postselect(const MeasurementSpec &spec, int outcome) {
    Vector b = branch(spec, outcome);
    double p = b.squaredNorm();
    if (p < 1e-12) {
        throw std::domain_error("postselect: outcome has zero probability");
    }
    amps_ = b / std::sqrt(p);
    return {outcome, p};
}

Vector ProtocolState::contract_except(int qudit, const Vector &others) const {
    check_qudit(qudit);
    if (others.size() != ipow(d_, m_ - 1)) {
        throw std::invalid_argument("contract_except: wrong length for the other qudits");
    }
    long long stride = ipow(d_, m_ - 1 - qudit);
    Vector out = Vector::Zero(d_);
    for (long long i = 0; i < amps_.size(); i++) {
        long long digit = (i / stride) % d_;
        long long rest = (i / (stride * d_)) * stride + i % stride;
        out(digit) += std::conj(others(rest)) * amps_(i);
    }
    return out;
}

namespace {

const Matrix &sum3() {
    static const Matrix m = sum_gate(3);
    return m;
}

Vector basis_vector(int d, int i) {
    Vector v = Vector::Zero(d);
    v(i) = 1;
    return v;
}

const MeasurementSpec &low_two(int qudit) {
    static const MeasurementSpec specs[2] = {
        MeasurementSpec::project(0, {basis_vector(3, 0), basis_vector(3, 1)}),
        MeasurementSpec::project(1, {basis_vector(3, 0), basis_vector(3, 1)}),
    };
    return specs[qudit];
}

const MeasurementSpec &onto_h0() {
    static const MeasurementSpec spec = MeasurementSpec::project(0, {hadamard(3) * basis_vector(3, 0)});
    return spec;
}

ProtocolState ancilla_start() {
    static const Vector start = kron(hadamard(3) * basis_vector(3, 1), hadamard(3) * basis_vector(3, 2));
    return ProtocolState(3, 2, start, 0);
}

}  // namespace

double ancilla_success_probability() {
    ProtocolState s = ancilla_start();
    double p = 1;
    p *= s.postselect(low_two(0), 0).probability;
    p *= s.postselect(low_two(1), 0).probability;
    s.apply(sum3(), {0, 1});
    p *= s.postselect(onto_h0(), 0).probability;
    return p;
}

AncillaPreparation prepare_flip_ancilla(Rng &rng) {
    AncillaPreparation out;
    static const Vector h0 = hadamard(3) * basis_vector(3, 0);
    while (true) {
        out.attempts++;
        ProtocolState s = ancilla_start();
        bool ok = true;
        for (int q = 0; q < 2; q++) {
            const auto &spec = low_two(q);
            auto probs = s.probabilities(spec);
            if (rng.uniform() < probs[0]) {
                s.postselect(spec, 0);
            } else {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        out.eta = s.amplitudes();
        s.apply(sum3(), {0, 1});
        const auto &spec = onto_h0();
        if (rng.uniform() >= s.probabilities(spec)[0]) {
            continue;
        }
        s.postselect(spec, 0);
        out.psi = s.contract_except(1, h0);
        return out;
    }
}

FlipRound run_flip_round(const Vector &phi, const Vector &psi, Rng &rng) {
    if (phi.size() != 3 || psi.size() != 3 || std::abs(phi.norm() - 1) > 1e-10) {
        throw std::invalid_argument("run_flip_round: need unit qutrit states");
    }
    ProtocolState s(3, 2, kron(phi, psi), 0);
    s.apply(sum3(), {0, 1});
    auto probs = s.probabilities(MeasurementSpec::standard(1));
    double u = rng.uniform();
    int k = 0;
    for (double acc = probs[0]; k < 2 && u >= acc; acc += probs[static_cast<size_t>(++k)]) {
    }
    s.postselect(MeasurementSpec::standard(1), k);
    FlipRound out;
    out.outcome = k;
    out.phi = s.contract_except(0, basis_vector(3, k));
    out.signs[static_cast<size_t>((k + 2) % 3)] = -1;
    return out;
}

bool is_flip2_pattern(const std::array<int, 3> &s) {
    return (s[0] == 1 && s[1] == 1 && s[2] == -1) || (s[0] == -1 && s[1] == -1 && s[2] == 1);
}

std::vector<FlipCurvePoint> estimate_flip_success(long long trials, int n_max, std::uint64_t seed) {
    if (trials < 1 || n_max < 1) {
        throw std::invalid_argument("estimate_flip_success: need trials >= 1 and n_max >= 1");
    }
    Rng rng(seed);
    std::vector<long long> done_at(static_cast<size_t>(n_max) + 1, 0);
    Vector phi = Vector::Constant(3, 1.0 / std::sqrt(3.0));
    for (long long t = 0; t < trials; t++) {
        std::array<int, 3> acc{1, 1, 1};
        Vector state = phi;
        for (int n = 1; n <= n_max; n++) {
            AncillaPreparation anc = prepare_flip_ancilla(rng);
            FlipRound r = run_flip_round(state, anc.psi, rng);
            state = r.phi;
            for (size_t i = 0; i < 3; i++) {
                acc[i] *= r.signs[i];
            }
            if (is_flip2_pattern(acc)) {
                done_at[static_cast<size_t>(n)]++;
                break;
            }
        }
    }
    std::vector<FlipCurvePoint> out;
    long long cumulative = 0;
    for (int n = 1; n <= n_max; n++) {
        cumulative += done_at[static_cast<size_t>(n)];
        FlipCurvePoint pt;
        pt.n = n;
        pt.p_hat = static_cast<double>(cumulative) / static_cast<double>(trials);
        pt.p_exact = flip_closed_form(n).value();
        pt.stderr_hat = std::sqrt(pt.p_hat * (1 - pt.p_hat) / static_cast<double>(trials));
        pt.sigma_exact = std::sqrt(pt.p_exact * (1 - pt.p_exact) / static_cast<double>(trials));
        out.push_back(pt);
    }
    return out;
}

Rational flip_absorption_exact(int n) {
    if (n < 0 || n > 39) {
        throw std::out_of_range("flip_absorption_exact: n must lie in 0..39");
    }
    // Patterns as 3-bit masks of flipped coefficients, identified with their
    // complement; class representative = the mask with bit 2 clear.
    auto cls = [](int mask) { return (mask & 4) ? (~mask & 7) : mask; };
    const int target = cls(4);
    std::array<std::int64_t, 8> weight{};
    weight[0] = 1;
    std::int64_t absorbed = 0;
    std::int64_t den = 1;
    for (int round = 0; round < n; round++) {
        std::array<std::int64_t, 8> next{};
        for (int m = 0; m < 8; m++) {
            if (weight[static_cast<size_t>(m)] == 0) {
                continue;
            }
            for (int flip : {4, 1, 2}) {
                int c = cls(m ^ flip);
                if (c == target) {
                    absorbed += weight[static_cast<size_t>(m)] * ipow(3, n - round - 1);
                } else {
                    next[static_cast<size_t>(c)] += weight[static_cast<size_t>(m)];
                }
            }
        }
        weight = next;
        den *= 3;
    }
    return {absorbed, den};
}

Rational flip_closed_form(int n) {
    if (n < 0 || n > 39) {
        throw std::out_of_range("flip_closed_form: n must lie in 0..39");
    }
    std::int64_t three = ipow(3, n);
    return {three - ipow(2, n), three};
}

}  // namespace metaplectic
