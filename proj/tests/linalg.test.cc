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

#include "metaplectic/linalg.h"

#include "gtest/gtest.h"

using namespace metaplectic;

TEST(linalg, roots_of_unity) {
    EXPECT_NEAR(std::abs(root_of_unity(3) - Complex(-0.5, std::sqrt(3.0) / 2)), 0, 1e-15);
    EXPECT_NEAR(std::abs(root_of_unity(5, -1) - std::conj(root_of_unity(5))), 0, 1e-15);
    EXPECT_NEAR(std::abs(expi_pi(1.0 / 12) - std::polar(1.0, kPi / 12)), 0, 1e-15);
}

TEST(linalg, equal_up_to_phase_scalar) {
    Complex gamma = expi_pi(1.0 / 12);
    Matrix id = Matrix::Identity(3, 3);
    auto c = equal_up_to_phase(gamma * id, id, 1e-12);
    EXPECT_TRUE(c.equal);
    EXPECT_NEAR(std::abs(c.phase - gamma), 0, 1e-15);
}

TEST(linalg, equal_up_to_phase_rejects_non_proportional) {
    Matrix a = Matrix::Identity(3, 3);
    Matrix b = a;
    b(2, 2) = -1;
    EXPECT_FALSE(equal_up_to_phase(a, b, 1e-6).equal);
    EXPECT_THROW(equal_up_to_phase(a, Matrix::Identity(2, 2), 1e-6), std::invalid_argument);
}

TEST(linalg, dominant_entry_breaks_ties_by_position) {
    Matrix m(2, 2);
    m << 0.5, Complex(0, 1), 1, 0.2;
    auto [r, c] = dominant_entry(m);
    EXPECT_EQ(r, 0);
    EXPECT_EQ(c, 1);
}

TEST(linalg, spans_and_complements) {
    Matrix v(3, 2);
    v << 1, 1, 0, 1, 0, 0;
    Matrix s = orthonormal_span(v);
    EXPECT_EQ(s.cols(), 2);
    EXPECT_LT(unitarity_residual(s), 1e-12);
    Matrix perp = orthogonal_complement(v);
    ASSERT_EQ(perp.cols(), 1);
    EXPECT_NEAR(std::abs(perp(2, 0)), 1, 1e-12);
    EXPECT_EQ(numerical_rank(v), 2);
}

TEST(linalg, kron_ordering) {
    Matrix a(2, 1);
    a << 0, 1;
    Matrix b(2, 1);
    b << 1, 0;
    Matrix k = kron(a, b);
    // |1> (x) |0> sits at index 1*2 + 0.
    EXPECT_EQ(k(2, 0), Complex(1));
    EXPECT_EQ(k.cwiseAbs().sum(), 1);
}

TEST(linalg, format) {
    EXPECT_EQ(format_complex(Complex(0.5, -0.25), 3), "0.500-0.250i");
    EXPECT_EQ(format_complex(Complex(-0.0, -0.0), 2), "0.00+0.00i");
    Matrix m = Matrix::Identity(2, 2);
    EXPECT_EQ(format_matrix(m, 1), "1.0+0.0i 0.0+0.0i\n0.0+0.0i 1.0+0.0i\n");
}
