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

#include "metaplectic/category.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace metaplectic;

namespace {

std::vector<std::string> names(const Category &cat, const std::vector<LabelId> &ids) {
    std::vector<std::string> out;
    for (LabelId id : ids) {
        out.push_back(cat.label_name(id));
    }
    return out;
}

}  // namespace

TEST(category, su2_4_fusion_examples) {
    Category cat = builtin_category("su2_4");
    LabelId eps = cat.label_id("eps");
    LabelId z = cat.label_id("z");
    EXPECT_EQ(cat.fuse(eps, eps), (std::vector<LabelId>{cat.label_id("one"), cat.label_id("y")}));
    EXPECT_EQ(cat.fuse(z, z), (std::vector<LabelId>{cat.unit()}));
    EXPECT_EQ(cat.label_id("1"), eps);
    EXPECT_EQ(cat.label_id("4"), z);
    EXPECT_EQ(cat.label_id("eps'"), cat.label_id("3"));
}

TEST(category, so3_2_is_an_alias) {
    EXPECT_EQ(builtin_category("so3_2").name(), "su2_4");
    EXPECT_THROW(builtin_category("su2_5"), std::invalid_argument);
}

TEST(category, quantum_dimensions) {
    Category su = builtin_category("su2_4");
    EXPECT_DOUBLE_EQ(su.qdim(su.label_id("one")), 1);
    EXPECT_DOUBLE_EQ(su.qdim(su.label_id("z")), 1);
    EXPECT_NEAR(su.qdim(su.label_id("eps")), std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(su.qdim(su.label_id("y")), 2, 1e-15);
    Category so = builtin_category("so5_2");
    EXPECT_NEAR(so.qdim(so.label_id("eps")), std::sqrt(5.0), 1e-15);
    for (const auto *cat : {&su, &so}) {
        for (LabelId a = 0; a < cat->num_labels(); a++) {
            EXPECT_GE(cat->qdim(a), 1.0);
        }
    }
}

TEST(category, so5_2_fusion_rules) {
    Category cat = builtin_category("so5_2");
    LabelId y1 = cat.label_id("y1");
    LabelId y2 = cat.label_id("y2");
    EXPECT_EQ(names(cat, cat.fuse(y1, y1)), (std::vector<std::string>{"1", "z", "y2"}));
    EXPECT_EQ(names(cat, cat.fuse(y2, y2)), (std::vector<std::string>{"1", "z", "y1"}));
    EXPECT_EQ(names(cat, cat.fuse(cat.label_id("eps"), cat.label_id("eps"))),
              (std::vector<std::string>{"1", "y1", "y2"}));
}

TEST(category, su2_4_matches_metaplectic_rules_under_relabeling) {
    Category cat = builtin_category("su2_4");
    FusionRules sym = metaplectic_fusion_rules(1);
    // Symbolic order {1, z, y, eps, eps'} in integer labels.
    const std::vector<LabelId> to_int = {0, 4, 2, 1, 3};
    for (LabelId a = 0; a < 5; a++) {
        for (LabelId b = 0; b < 5; b++) {
            for (LabelId c = 0; c < 5; c++) {
                EXPECT_EQ(sym.admissible(a, b, c),
                          cat.fusion().admissible(to_int[static_cast<size_t>(a)], to_int[static_cast<size_t>(b)],
                                                  to_int[static_cast<size_t>(c)]));
            }
        }
    }
}

TEST(category, f_matrix_examples) {
    Category cat = builtin_category("su2_4");
    Matrix f222 = *cat.f_matrix(2, 2, 2, 2);
    Matrix expected(3, 3);
    double s = 1 / std::sqrt(2.0);
    expected << 0.5, -s, 0.5, -s, 0, s, 0.5, s, 0.5;
    EXPECT_LT(max_abs_diff(f222, expected), 1e-12);

    Matrix f011 = *cat.f_matrix(0, 1, 1, 2);
    EXPECT_EQ(f011.rows(), 1);
    EXPECT_EQ(f011(0, 0), Complex(1));

    Matrix f111 = *cat.f_matrix(1, 1, 1, 1);
    Matrix e111(2, 2);
    e111 << -1 / std::sqrt(3.0), std::sqrt(2.0 / 3), std::sqrt(2.0 / 3), 1 / std::sqrt(3.0);
    EXPECT_LT(max_abs_diff(f111, e111), 1e-12);

    EXPECT_THROW(cat.f_matrix(1, 1, 1, 0), InadmissibleError);
}

TEST(category, so5_2_r_symbols) {
    Category cat = builtin_category("so5_2");
    LabelId eps = cat.label_id("eps");
    EXPECT_NEAR(std::abs(*cat.r_symbol(eps, eps, cat.unit()) - Complex(0, -1)), 0, 1e-15);
    LabelId y1 = cat.label_id("y1");
    LabelId y2 = cat.label_id("y2");
    EXPECT_FALSE(cat.r_symbol(y1, y2, y1).has_value());
    EXPECT_THROW(cat.r_required(y1, y2, y1), MissingDataError);
    EXPECT_EQ(*cat.r_symbol(cat.unit(), y1, y1), Complex(1));
    EXPECT_NEAR(cat.constants().at("h"), std::sqrt(10 - 2 * std::sqrt(5.0)), 1e-15);
    EXPECT_NEAR(cat.constants().at("k"), std::sqrt(10 + 2 * std::sqrt(5.0)), 1e-15);
}

TEST(category, missing_f_block_is_typed) {
    Category full = builtin_category("su2_4");
    Category bare("bare", full.labels(), full.fusion(), {}, {});
    EXPECT_FALSE(bare.f_matrix(2, 2, 2, 2).has_value());
    EXPECT_THROW(bare.f_matrix_required(2, 2, 2, 2), MissingDataError);
    // Blocks with a unit leg use the trivial convention.
    EXPECT_TRUE(bare.f_matrix(0, 2, 2, 2).has_value());
    ConsistencyReport r = check_consistency(bare);
    EXPECT_GT(r.f_missing, 0);
    EXPECT_GT(r.skips(), 0);
}

TEST(category, su2_4_consistency) {
    ConsistencyReport r = check_consistency(builtin_category("su2_4"));
    EXPECT_TRUE(r.fusion_commutative);
    EXPECT_TRUE(r.fusion_unit);
    EXPECT_EQ(r.fusion_associativity_failures, 0);
    EXPECT_LT(r.fusion_dimension_max, 1e-9);
    EXPECT_LT(r.pentagon_max, 1e-9);
    EXPECT_GT(r.pentagon_evaluated, 0);
    EXPECT_EQ(r.skips(), 0);
    EXPECT_LT(r.hexagon_max, 1e-9);
    EXPECT_LT(r.unitarity_max, 1e-9);
    EXPECT_LT(r.r_modulus_max, 1e-12);
    EXPECT_EQ(r.f_missing, 0);
    EXPECT_EQ(r.r_missing, 0);
}

TEST(category, so5_2_consistency_counts_skips) {
    ConsistencyReport r = check_consistency(builtin_category("so5_2"));
    EXPECT_LT(r.fusion_dimension_max, 1e-9);
    EXPECT_LT(r.pentagon_max, 1e-9);
    EXPECT_LT(r.unitarity_max, 1e-9);
    EXPECT_LT(r.hexagon_max, 1e-9);
    EXPECT_GT(r.skips(), 0);
    EXPECT_GT(r.r_missing, 0);
}

TEST(category, constructor_rejects_bad_blocks) {
    Category full = builtin_category("su2_4");
    FSymbolTable f;
    f[FKey{1, 1, 1, 0}] = Matrix::Identity(1, 1);
    EXPECT_THROW(Category("bad", full.labels(), full.fusion(), f, {}), InadmissibleError);
    FSymbolTable g;
    g[FKey{1, 1, 1, 1}] = Matrix::Identity(3, 3);
    EXPECT_THROW(Category("bad", full.labels(), full.fusion(), g, {}), InadmissibleError);
}
