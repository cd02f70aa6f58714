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

#ifndef METAPLECTIC_PROTOCOL_SIM_H
#define METAPLECTIC_PROTOCOL_SIM_H

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "metaplectic/linalg.h"

namespace metaplectic {

/// Seeded generator; uniform doubles use the top 53 bits so streams are
/// identical across platforms.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

   private:
    std::mt19937_64 engine_;
};

struct MeasurementSpec {
    enum class Kind { kStandard, kProject };
    Kind kind = Kind::kStandard;
    int qudit = 0;
    /// Orthonormal spanning vectors on one qudit (kProject only).
    std::vector<Vector> subspace;
    /// Sum of v v^dagger over subspace; filled by project().
    Matrix projector;

    static MeasurementSpec standard(int qudit);
    static MeasurementSpec project(int qudit, std::vector<Vector> subspace);
};

struct MeasurementResult {
    int outcome = 0;  // basis index, or 0 = inside / 1 = outside the subspace
    double probability = 0;
};

/// State vector over (C^d)^{(x) m}; qudit 0 is the most significant digit.
class ProtocolState {
   public:
    ProtocolState(int d, int m, std::uint64_t seed);
    ProtocolState(int d, int m, Vector amplitudes, std::uint64_t seed);

    int d() const {
        return d_;
    }
    int m() const {
        return m_;
    }
    const Vector &amplitudes() const {
        return amps_;
    }
    Rng &rng() {
        return rng_;
    }
    void set_amplitudes(Vector amplitudes);

    /// Applies a d^k x d^k gate to the listed qudits (first listed = most
    /// significant factor of the gate).
    void apply(const Matrix &gate, const std::vector<int> &qudits);

    /// Born probabilities of every outcome of spec.
    std::vector<double> probabilities(const MeasurementSpec &spec) const;
    /// Samples an outcome from the rng, collapses and renormalizes.
    MeasurementResult measure(const MeasurementSpec &spec);
    /// Collapses onto a chosen outcome; throws std::domain_error when its
    /// probability is below 1e-12.
    MeasurementResult postselect(const MeasurementSpec &spec, int outcome);

    /// Reduced pure state of one qudit when the register is a product with
    /// `others` on the remaining qudits; returns <others| psi>.
    Vector contract_except(int qudit, const Vector &others) const;

   private:
    Vector branch(const MeasurementSpec &spec, int outcome) const;
    void check_qudit(int q) const;

    int d_;
    int m_;
    Vector amps_;
    Rng rng_;
};

struct AncillaPreparation {
    Vector psi;       // (|0> - |1> + |2>)/sqrt 3 on success
    Vector eta;       // the two-qutrit state after projecting both onto span{|0>,|1>}
    int attempts = 0;
};

/// H|1> (x) H|2>, project each qutrit onto span{|0>,|1>}, apply SUM, project
/// the first qutrit onto span{H|0>}; any failed projection restarts.
AncillaPreparation prepare_flip_ancilla(Rng &rng);

/// Probability that one preparation attempt succeeds, from the Born rule.
double ancilla_success_probability();

struct FlipRound {
    int outcome = 0;
    std::array<int, 3> signs{1, 1, 1};  // sign applied to each coefficient
    Vector phi;
};

/// SUM on |phi>|psi>, then a standard-basis measurement of the ancilla.
FlipRound run_flip_round(const Vector &phi, const Vector &psi, Rng &rng);

/// True iff the pattern is Flip[2] or Flip[0] Flip[1] (Flip[2] up to sign).
bool is_flip2_pattern(const std::array<int, 3> &signs);

struct FlipCurvePoint {
    int n = 0;
    double p_hat = 0;
    double p_exact = 0;
    double stderr_hat = 0;  // sqrt(p_hat (1 - p_hat) / trials)
    double sigma_exact = 0; // sqrt(p_exact (1 - p_exact) / trials)
};

/// Monte Carlo of the repeat-until-Flip[2] protocol with a fresh ancilla per
/// round; p_hat[n] is the fraction of runs done within n rounds.
std::vector<FlipCurvePoint> estimate_flip_success(long long trials, int n_max, std::uint64_t seed);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    bool operator==(const Rational &o) const {
        return num * o.den == o.num * den;
    }
};

/// Absorption probability of the sign-pattern chain on Z_2^3 modulo global
/// sign after n rounds, exact over denominator 3^n (n <= 39).
Rational flip_absorption_exact(int n);
/// 1 - (2/3)^n as an exact fraction.
Rational flip_closed_form(int n);

}  // namespace metaplectic

#endif
