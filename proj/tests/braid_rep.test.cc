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

#include "metaplectic/braid_rep.h"

#include "gtest/gtest.h"
#include "reference_matrices.h"

using namespace metaplectic;

namespace {

BraidRep pair(const char *cat_name, const char *total) {
    Category cat = builtin_category(cat_name);
    return pair_tree_generators(cat, cat.label_id("eps"), cat.label_id(total));
}

}  // namespace

TEST(braid_rep, su2_4_reference_matrices) {
    BraidRep rep = pair("su2_4", "y");
    ASSERT_EQ(rep.n_strands(), 4);
    for (int i = 1; i <= 3; i++) {
        EXPECT_LT(max_abs_diff(rep.sigma(i), reference::su2_4_sigma(i)), 1e-9) << "sigma" << i;
    }
    Complex entry = reference::gamma() * Complex(0.5, std::sqrt(3.0) / 6);
    EXPECT_NEAR(std::abs(rep.sigma(2)(0, 0) - entry), 0, 1e-12);
}

TEST(braid_rep, so5_2_reference_matrices) {
    BraidRep rep = pair("so5_2", "y1");
    for (int i = 1; i <= 3; i++) {
        EXPECT_LT(max_abs_diff(rep.sigma(i), reference::so5_2_sigma(i)), 1e-9) << "sigma" << i;
    }
}

TEST(braid_rep, qubit_matrices_up_to_phase) {
    BraidRep rep = pair("su2_4", "0");
    ASSERT_EQ(rep.dim(), 2u);
    for (int i = 1; i <= 3; i++) {
        auto c = equal_up_to_phase(rep.sigma(i), reference::qubit_sigma(i), 1e-9);
        EXPECT_TRUE(c.equal) << "sigma" << i << " residual " << c.residual;
    }
    EXPECT_LT(max_abs_diff(rep.sigma(1), reference::gamma() * reference::qubit_sigma(1)), 1e-12);
}

TEST(braid_rep, sigma_index_is_checked) {
    BraidRep rep = pair("su2_4", "y");
    EXPECT_THROW(rep.sigma(0), std::out_of_range);
    EXPECT_THROW(rep.sigma(4), std::out_of_range);
}

TEST(braid_rep, engine_matches_closed_formula) {
    for (const char *name : {"su2_4", "so5_2"}) {
        Category cat = builtin_category(name);
        LabelId eps = cat.label_id("eps");
        int compared = 0;
        for (LabelId b = 0; b < cat.num_labels(); b++) {
            FusionTreeBasis basis = enumerate_basis(cat, TreeShape::pair_tree(eps), b);
            if (basis.dim() == 0) {
                continue;
            }
            BraidRep closed;
            try {
                closed = pair_tree_generators(cat, eps, b);
            } catch (const MissingDataError &) {
                continue;
            }
            for (MoveSchedule s : {MoveSchedule::kLeftNested, MoveSchedule::kRightNested}) {
                BraidRep moves = general_generators(cat, basis, s);
                for (int i = 1; i <= 3; i++) {
                    EXPECT_LT(max_abs_diff(moves.sigma(i), closed.sigma(i)), 1e-9)
                        << name << " total " << cat.label_name(b) << " sigma" << i;
                }
            }
            compared++;
        }
        EXPECT_GE(compared, 1) << name;
    }
}

TEST(braid_rep, four_strand_relations) {
    RepCheckReport r = rep_check(pair("su2_4", "y"));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.braid_instances, 2);
    EXPECT_EQ(r.far_commute_instances, 1);
    EXPECT_TRUE(rep_check(pair("so5_2", "y1")).ok());
}

TEST(braid_rep, eight_strand_relations) {
    Category cat = builtin_category("su2_4");
    LabelId eps = cat.label_id("eps");
    TreeShape two = TreeShape::join(TreeShape::pair_tree(eps), TreeShape::pair_tree(eps));
    BraidRep rep = general_generators(cat, enumerate_basis(cat, two, cat.label_id("y")));
    ASSERT_EQ(rep.dim(), 27u);
    ASSERT_EQ(rep.n_strands(), 8);
    RepCheckReport r = rep_check(rep);
    EXPECT_TRUE(r.ok()) << r.unitarity_max << " " << r.braid_max << " " << r.far_commute_max;
    EXPECT_EQ(r.braid_instances, 6);
    EXPECT_EQ(r.far_commute_instances, 15);
}

TEST(braid_rep, corrupted_entry_is_detected) {
    BraidRep rep = pair("su2_4", "y");
    rep.generators[1](0, 1) *= -1;
    RepCheckReport r = rep_check(rep);
    EXPECT_FALSE(r.ok());
    EXPECT_GT(r.unitarity_max, 0.1);
}

TEST(braid_rep, wrong_phase_breaks_braid_relation) {
    BraidRep rep = pair("su2_4", "y");
    rep.generators[0](1, 1) *= root_of_unity(3);
    RepCheckReport r = rep_check(rep);
    EXPECT_LT(r.unitarity_max, 1e-12);
    EXPECT_GT(r.braid_max, 0.1);
}

TEST(braid_rep, two_strands_are_r_symbols) {
    Category cat = builtin_category("so5_2");
    LabelId eps = cat.label_id("eps");
    for (LabelId b : cat.fuse(eps, eps)) {
        BraidRep rep = general_generators(cat, enumerate_basis(cat, TreeShape::left_nested(2, eps), b));
        ASSERT_EQ(rep.dim(), 1u);
        EXPECT_NEAR(std::abs(rep.sigma(1)(0, 0) - cat.r_required(eps, eps, b)), 0, 1e-15);
    }
}
