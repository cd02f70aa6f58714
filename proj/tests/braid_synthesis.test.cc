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

#include "metaplectic/braid_synthesis.h"

#include "gtest/gtest.h"
#include "metaplectic/qudit_gates.h"

using namespace metaplectic;

namespace {

struct Models {
    Category su = builtin_category("su2_4");
    Category so = builtin_category("so5_2");
    BraidRep qutrit = pair_tree_generators(su, su.label_id("eps"), su.label_id("y"));
    BraidRep qubit = pair_tree_generators(su, su.label_id("eps"), su.unit());
    BraidRep qupit = pair_tree_generators(so, so.label_id("eps"), so.label_id("y1"));
};

const Models &models() {
    static const Models m;
    return m;
}

Matrix perm(const std::vector<int> &images) {
    auto n = static_cast<Eigen::Index>(images.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        m(images[static_cast<size_t>(j)], j) = 1;
    }
    return m;
}

IdentityCheck check(const BraidRep &rep, const std::string &word, const Matrix &target) {
    return verify_identity(rep, parse_braid_word(word, rep.n_strands()), target);
}

}  // namespace

TEST(braid_synthesis, parse_words) {
    BraidWord w = parse_braid_word("p q^-1 -2", 4);
    EXPECT_EQ(w.letters, (std::vector<int>{1, 2, 1, -3, -2, -3, -2}));
    EXPECT_EQ(parse_braid_word("Hword", 4).letters, (std::vector<int>{3, 2, 3, 3, 2, 3, 1, 2, 1, 3, 2, 3, 3, 2, 3}));
    EXPECT_EQ(parse_braid_word("CZword", 8).letters.size(), 32u);
    EXPECT_THROW(parse_braid_word("4", 4), std::invalid_argument);
    EXPECT_THROW(parse_braid_word("0", 4), std::invalid_argument);
    EXPECT_THROW(parse_braid_word("bogus", 4), std::invalid_argument);
    EXPECT_THROW(parse_braid_word("s2", 4), std::invalid_argument);
    EXPECT_TRUE(named_word("p").has_value());
    EXPECT_FALSE(named_word("r").has_value());
}

TEST(braid_synthesis, word_algebra) {
    BraidWord w = parse_braid_word("1 -2 3", 4);
    EXPECT_EQ(w.inverse().letters, (std::vector<int>{-3, 2, -1}));
    EXPECT_EQ(w.pow(2).letters, (std::vector<int>{1, -2, 3, 1, -2, 3}));
    EXPECT_EQ(w.pow(-1).letters, w.inverse().letters);
    EXPECT_TRUE(w.pow(0).letters.empty());
    EXPECT_EQ(w.then(w.inverse()).letters.size(), 6u);
    EXPECT_EQ(parse_braid_word(w.to_string(), 4).letters, w.letters);
}

TEST(braid_synthesis, word_is_a_matrix_product) {
    const BraidRep &rep = models().qupit;
    Matrix u = eval_word(rep, parse_braid_word("1 2 -3", 4));
    Matrix expected = rep.sigma(1) * rep.sigma(2) * rep.sigma(3).adjoint();
    EXPECT_LT(max_abs_diff(u, expected), 1e-14);
    Matrix id = eval_word(rep, parse_braid_word("1 2 3 -3 -2 -1", 4));
    EXPECT_LT(max_abs_diff(id, Matrix::Identity(5, 5)), 1e-12);
    EXPECT_THROW(eval_word(rep, parse_braid_word("1", 3)), std::invalid_argument);
}

TEST(braid_synthesis, qutrit_hadamard) {
    IdentityCheck c = check(models().qutrit, "Hword", hadamard(3));
    EXPECT_TRUE(c.pass) << c.residual;
    EXPECT_LT(c.leakage, 1e-12);
}

TEST(braid_synthesis, squares_of_p_and_q) {
    const BraidRep &rep = models().qutrit;
    // Note p^2 swaps |0>,|2> and q^2 swaps |0>,|1>, not the other way round.
    EXPECT_TRUE(check(rep, "p p", -perm({2, 1, 0})).pass);
    EXPECT_TRUE(check(rep, "q q", -perm({1, 0, 2})).pass);
    EXPECT_FALSE(check(rep, "p p", -perm({1, 0, 2})).pass);
    EXPECT_FALSE(check(rep, "q q", -perm({2, 1, 0})).pass);
}

TEST(braid_synthesis, qutrit_diagonal_generators) {
    const BraidRep &rep = models().qutrit;
    EXPECT_TRUE(check(rep, "1", q_gate(3, 1)).pass);
    EXPECT_TRUE(check(rep, "3", q_gate(3, 2)).pass);
    EXPECT_FALSE(check(rep, "1", q_gate(3, 2)).pass);
}

TEST(braid_synthesis, leakage_free_cz) {
    const Category &cat = models().su;
    LabelId eps = cat.label_id("eps");
    LabelId y = cat.label_id("y");
    BlockEmbedding e = block_embedding(cat, TreeShape::pair_tree(eps), y, 2, y);
    BraidRep rep = general_generators(cat, e.full);
    IdentityCheck c = verify_identity(rep, parse_braid_word("CZword", 8), cz_gate(3), e.map);
    EXPECT_TRUE(c.pass) << c.residual;
    EXPECT_LT(c.residual, 1e-8);
    EXPECT_LT(c.leakage, 1e-8);
    // A single block generator mixes blocks with the rest of the space.
    IdentityCheck leak = verify_identity(rep, parse_braid_word("4", 8), cz_gate(3), e.map);
    EXPECT_FALSE(leak.pass);
    EXPECT_GT(leak.leakage, 0.1);
}

TEST(braid_synthesis, qupit_gate_words) {
    const BraidRep &rep = models().qupit;
    EXPECT_TRUE(check(rep, "-1 -3 2 2 -1 -3", hadamard(5)).pass);
    EXPECT_TRUE(check(rep, "1 -3", z_gate(5)).pass);
    EXPECT_TRUE(check(rep, "1 2 -1 -1 3 3 -2 -1", x_gate(5)).pass);
    EXPECT_TRUE(check(rep, "1 1 -2 -2 -1 -3 2 1", mult_gate(5, 2)).pass);
    EXPECT_TRUE(check(rep, "1 1 -2 1 3 2 2 3", mult_gate(5, 3)).pass);
    EXPECT_TRUE(check(rep, "1 2 1 3 2 1", mult_gate(5, 4)).pass);
}

TEST(braid_synthesis, reversed_word_fails) {
    const BraidRep &rep = models().qupit;
    EXPECT_FALSE(check(rep, "-1 -2 3 3 -1 -1 2 1", x_gate(5)).pass);
}

TEST(braid_synthesis, verify_matrix_rejects_wrong_size) {
    EXPECT_THROW(verify_matrix(hadamard(3), hadamard(5)), std::invalid_argument);
}

TEST(braid_synthesis, closure_key_is_phase_invariant) {
    Matrix h = hadamard(3);
    EXPECT_EQ(closure_key(h, true), closure_key(root_of_unity(7) * h, true));
    EXPECT_NE(closure_key(h, false), closure_key(root_of_unity(7) * h, false));
}

TEST(braid_synthesis, small_closures) {
    ClosureResult z3 = group_closure({z_gate(3)}, false);
    EXPECT_EQ(z3.order, 3);
    EXPECT_EQ(z3.center_size, 3);
    ClosureResult x = group_closure({x_gate(5), mult_gate(5, 2)}, true);
    EXPECT_EQ(x.order, 20);
    long long total = 0;
    for (auto [order, count] : x.order_histogram) {
        EXPECT_EQ(20 % order, 0);
        total += count;
    }
    EXPECT_EQ(total, 20);
}

TEST(braid_synthesis, hessian_group) {
    ClosureResult proj = group_closure(models().qutrit.generators, true);
    EXPECT_EQ(proj.order, 216);
    EXPECT_EQ(proj.center_size, 1);
    ClosureResult lin = group_closure(models().qutrit.generators, false);
    EXPECT_EQ(lin.order, 648);
    EXPECT_EQ(lin.center_size, 3);
}

TEST(braid_synthesis, qubit_model_group) {
    EXPECT_EQ(group_closure(models().qubit.generators, true).order, 12);
    EXPECT_EQ(group_closure(models().qubit.generators, false).order, 24);
}

TEST(braid_synthesis, cap_is_reported) {
    ClosureResult r = group_closure({hadamard(3), p_gate(3, 1)}, true, 500);
    EXPECT_TRUE(r.cap_exceeded);
    EXPECT_GT(r.order, 500);
}
