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

#include "metaplectic/density_witness.h"

#include "gtest/gtest.h"
#include "metaplectic/qudit_gates.h"

using namespace metaplectic;

TEST(density_witness, qutrit_eigenvalues) {
    Complex lo(2.0 / 3, -std::sqrt(5.0) / 3);
    Complex hi(2.0 / 3, std::sqrt(5.0) / 3);
    for (int i = 0; i < 3; i++) {
        QutritWitness w = qutrit_commutator_witness(i);
        EXPECT_TRUE(w.pass()) << i;
        ASSERT_EQ(w.w_eigenvalues.size(), 3u);
        EXPECT_NEAR(std::abs(w.w_eigenvalues[0] - lo), 0, 1e-9);
        EXPECT_NEAR(std::abs(w.w_eigenvalues[1] - 1.0), 0, 1e-9);
        EXPECT_NEAR(std::abs(w.w_eigenvalues[2] - hi), 0, 1e-9);
        EXPECT_LT(w.polynomial_residual, 1e-9);
        EXPECT_NEAR(w.fixed_overlap, 1, 1e-9);
        EXPECT_LT(w.fixed_vector_residual, 1e-9);
        EXPECT_GT(w.commutator_norm, 0.1);
    }
}

TEST(density_witness, stated_fixed_vectors) {
    Complex w = root_of_unity(3);
    Vector e0 = qutrit_fixed_vector(0);
    EXPECT_EQ(e0(0), Complex(0));
    EXPECT_EQ(e0(1), Complex(-1));
    EXPECT_EQ(e0(2), Complex(1));
    Vector e2 = qutrit_fixed_vector(2);
    EXPECT_NEAR(std::abs(e2(0) + w), 0, 1e-15);
    EXPECT_EQ(e2(1), Complex(1));
    CommutatorPair c = commutator_pair(hadamard(3), p_gate(3, 1));
    Vector v = qutrit_fixed_vector(1);
    EXPECT_LT((c.w * v - v).norm(), 1e-12);
    EXPECT_LT((c.z * v - v).norm(), 1e-12);
}

TEST(density_witness, sorted_eigenvalues_by_argument) {
    Matrix d = Matrix::Zero(3, 3);
    d.diagonal() << Complex(0, 1), -1.0, Complex(0, -1);
    auto e = sorted_eigenvalues(d);
    EXPECT_NEAR(std::abs(e[0] - Complex(0, -1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(e[1] - Complex(0, 1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(e[2] + 1.0), 0, 1e-12);
}

TEST(density_witness, infinite_order_screen) {
    CommutatorPair c = commutator_pair(hadamard(3), p_gate(3, 0));
    InfiniteOrderWitness r = infinite_order_witness(c.w);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.screened, 2);
    EXPECT_GT(r.min_distance, 1e-6);
}

TEST(density_witness, finite_order_is_rejected) {
    InfiniteOrderWitness r = infinite_order_witness(z_gate(5));
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.worst_k % 5, 0);
    EXPECT_FALSE(infinite_order_witness(Matrix::Identity(3, 3)).pass);
}

TEST(density_witness, schmidt_rank_of_sum) {
    for (int d : {3, 5}) {
        ImprimitivityWitness w = imprimitivity_witness(sum_gate(d), d);
        EXPECT_EQ(w.schmidt_rank, d);
        for (double s : w.schmidt_coefficients) {
            EXPECT_NEAR(s, 1 / std::sqrt(static_cast<double>(d)), 1e-12);
        }
    }
    Matrix product = kron(hadamard(3), x_gate(3));
    EXPECT_EQ(imprimitivity_witness(product, 3).schmidt_rank, 1);
}

TEST(density_witness, qupit_chain) {
    for (int p : {5, 7}) {
        QupitSubspaceReport r = qupit_subspace_chain(p);
        EXPECT_TRUE(r.pass()) << p;
        EXPECT_EQ(r.span_rank, p);
        EXPECT_EQ(static_cast<int>(r.entries.size()), p);
        for (const auto &e : r.entries) {
            EXPECT_LT(e.identity_on_complement, 1e-9);
            EXPECT_TRUE(e.x_infinite && e.y_infinite);
        }
    }
    EXPECT_THROW(qupit_subspace_chain(3), std::invalid_argument);
    EXPECT_THROW(qupit_subspace_chain(9), std::invalid_argument);
}

TEST(density_witness, qupit_subspace_columns) {
    Matrix s = qupit_subspace(5, 2);
    ASSERT_EQ(s.cols(), 2);
    EXPECT_EQ(numerical_rank(s), 2);
    EXPECT_NEAR(std::abs((s.col(0).adjoint() * s.col(1))(0, 0)), 0, 1e-12);
}

TEST(density_witness, so5_partial_results) {
    So5PartialReport r = so5_partial_results();
    EXPECT_TRUE(r.pass());
    ASSERT_EQ(r.fix_residual.size(), 4u);
    for (double x : r.fix_residual) {
        EXPECT_LT(x, 1e-8);
    }
    for (const auto &w : r.infinite) {
        EXPECT_TRUE(w.pass);
    }
    EXPECT_EQ(r.commutant_dimension, 1);
    EXPECT_LT(r.r_residual, 1e-12);
}

TEST(density_witness, commutant_dimension_counts) {
    EXPECT_EQ(commutant_dimension({z_gate(3)}), 3);
    EXPECT_EQ(commutant_dimension({z_gate(3), x_gate(3)}), 1);
    EXPECT_EQ(commutant_dimension({Matrix::Identity(2, 2)}), 4);
}
