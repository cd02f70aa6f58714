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

#include "gtest/gtest.h"
#include "metaplectic/qudit_gates.h"

using namespace metaplectic;

namespace {

Vector basis_vector(int d, int i) {
    Vector v = Vector::Zero(d);
    v(i) = 1;
    return v;
}

Vector flip_ancilla() {
    Vector psi(3);
    psi << 1, -1, 1;
    return psi / std::sqrt(3.0);
}

}  // namespace

TEST(protocol_sim, rng_is_reproducible) {
    Rng a(7);
    Rng b(7);
    for (int i = 0; i < 100; i++) {
        double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        EXPECT_GE(x, 0);
        EXPECT_LT(x, 1);
    }
}

TEST(protocol_sim, apply_respects_qudit_order) {
    ProtocolState s(3, 2, 1);
    s.apply(x_gate(3), {1});
    EXPECT_NEAR(std::abs(s.amplitudes()(1)), 1, 1e-15);
    s.apply(sum_gate(3), {1, 0});
    // |0,1> with qudit 1 as control gives |1,1>.
    EXPECT_NEAR(std::abs(s.amplitudes()(4)), 1, 1e-15);
    EXPECT_THROW(s.apply(x_gate(3), {2}), std::out_of_range);
    EXPECT_THROW(s.apply(sum_gate(3), {0}), std::invalid_argument);
}

TEST(protocol_sim, born_probabilities) {
    ProtocolState s(3, 1, 1);
    s.apply(hadamard(3), {0});
    auto p = s.probabilities(MeasurementSpec::standard(0));
    ASSERT_EQ(p.size(), 3u);
    for (double x : p) {
        EXPECT_NEAR(x, 1.0 / 3, 1e-15);
    }
    auto spec = MeasurementSpec::project(0, {basis_vector(3, 0), basis_vector(3, 1)});
    auto q = s.probabilities(spec);
    EXPECT_NEAR(q[0], 2.0 / 3, 1e-15);
    EXPECT_NEAR(q[1], 1.0 / 3, 1e-15);
}

TEST(protocol_sim, measure_collapses) {
    ProtocolState s(3, 2, 99);
    s.apply(hadamard(3), {0});
    s.apply(sum_gate(3), {0, 1});
    MeasurementResult r = s.measure(MeasurementSpec::standard(0));
    EXPECT_NEAR(r.probability, 1.0 / 3, 1e-12);
    auto p = s.probabilities(MeasurementSpec::standard(1));
    EXPECT_NEAR(p[static_cast<size_t>(r.outcome)], 1, 1e-12);
    EXPECT_NEAR(s.amplitudes().norm(), 1, 1e-12);
}

TEST(protocol_sim, postselect_zero_probability_throws) {
    ProtocolState s(3, 1, 1);
    EXPECT_THROW(s.postselect(MeasurementSpec::standard(0), 2), std::domain_error);
    EXPECT_NEAR(s.postselect(MeasurementSpec::standard(0), 0).probability, 1, 1e-15);
}

TEST(protocol_sim, project_rejects_non_orthonormal) {
    Vector v = basis_vector(3, 0) * 2.0;
    EXPECT_THROW(MeasurementSpec::project(0, {v}), std::invalid_argument);
}

TEST(protocol_sim, ancilla_preparation) {
    EXPECT_NEAR(ancilla_success_probability(), 1.0 / 9, 1e-12);
    Rng rng(5);
    Vector target = flip_ancilla();
    int attempts = 0;
    for (int t = 0; t < 200; t++) {
        AncillaPreparation a = prepare_flip_ancilla(rng);
        auto c = equal_up_to_phase(a.psi, target, 1e-10);
        EXPECT_TRUE(c.equal);
        EXPECT_GE(a.attempts, 1);
        attempts += a.attempts;
    }
    // Mean attempts is 9; 200 samples keep this comfortably inside.
    EXPECT_GT(attempts / 200.0, 6);
    EXPECT_LT(attempts / 200.0, 12);
}

TEST(protocol_sim, flip_round_sign_patterns) {
    Vector phi(3);
    phi << 0.6, Complex(0, 0.48), 0.64;
    Rng rng(2024);
    int seen[3] = {0, 0, 0};
    for (int t = 0; t < 300; t++) {
        FlipRound r = run_flip_round(phi, flip_ancilla(), rng);
        ASSERT_GE(r.outcome, 0);
        ASSERT_LT(r.outcome, 3);
        seen[r.outcome]++;
        std::array<int, 3> expected{1, 1, 1};
        expected[static_cast<size_t>((r.outcome + 2) % 3)] = -1;
        EXPECT_EQ(r.signs, expected);
        for (int j = 0; j < 3; j++) {
            EXPECT_NEAR(std::abs(r.phi(j) - static_cast<double>(expected[static_cast<size_t>(j)]) * phi(j)), 0,
                        1e-12);
        }
    }
    for (int k = 0; k < 3; k++) {
        EXPECT_GT(seen[k], 60);
    }
}

TEST(protocol_sim, flip2_patterns) {
    EXPECT_TRUE(is_flip2_pattern({1, 1, -1}));
    EXPECT_TRUE(is_flip2_pattern({-1, -1, 1}));
    EXPECT_FALSE(is_flip2_pattern({1, 1, 1}));
    EXPECT_FALSE(is_flip2_pattern({-1, 1, 1}));
    EXPECT_FALSE(is_flip2_pattern({1, -1, -1}));
}

TEST(protocol_sim, exact_chain_matches_closed_form) {
    for (int n = 1; n <= 20; n++) {
        Rational a = flip_absorption_exact(n);
        EXPECT_TRUE(a == flip_closed_form(n)) << n;
        EXPECT_DOUBLE_EQ(a.value(), 1 - std::pow(2.0 / 3, n));
    }
    EXPECT_TRUE(flip_absorption_exact(1) == (Rational{1, 3}));
    EXPECT_THROW(flip_absorption_exact(40), std::out_of_range);
}

TEST(protocol_sim, monte_carlo_small) {
    auto curve = estimate_flip_success(4000, 6, 12345);
    ASSERT_EQ(curve.size(), 6u);
    for (const auto &pt : curve) {
        EXPECT_NEAR(pt.p_exact, 1 - std::pow(2.0 / 3, pt.n), 1e-15);
        EXPECT_LE(std::abs(pt.p_hat - pt.p_exact), 4 * pt.sigma_exact) << pt.n;
    }
    auto again = estimate_flip_success(4000, 6, 12345);
    EXPECT_EQ(again[5].p_hat, curve[5].p_hat);
}
