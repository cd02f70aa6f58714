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

#include "metaplectic/category_io.h"

#include <filesystem>

#include "gtest/gtest.h"

using namespace metaplectic;

namespace {

CategoryParseError::Kind parse_kind(const std::string &text, int *line = nullptr) {
    try {
        parse_category(text);
    } catch (const CategoryParseError &e) {
        if (line) {
            *line = e.line();
        }
        return e.kind();
    }
    ADD_FAILURE() << "parse succeeded:\n" << text;
    return CategoryParseError::Kind::kMalformed;
}

const char *kTiny =
    "# category z2\n"
    "label 0 qdim 1\n"
    "label 1 qdim 1\n"
    "fuse 0 0 -> 0\n"
    "fuse 0 1 -> 1\n"
    "fuse 1 0 -> 1\n"
    "fuse 1 1 -> 0\n";

}  // namespace

TEST(category_io, round_trip_builtins) {
    for (const std::string &name : builtin_category_names()) {
        Category cat = builtin_category(name);
        std::string text = serialize_category(cat);
        Category back = parse_category(text);
        EXPECT_EQ(back.name(), cat.name());
        EXPECT_EQ(back.fusion(), cat.fusion());
        ASSERT_EQ(back.stored_f().size(), cat.stored_f().size());
        for (const auto &[key, block] : cat.stored_f()) {
            EXPECT_EQ(max_abs_diff(back.stored_f().at(key), block), 0) << name;
        }
        ASSERT_EQ(back.stored_r().size(), cat.stored_r().size());
        for (const auto &[key, r] : cat.stored_r()) {
            EXPECT_EQ(back.stored_r().at(key), r) << name;
        }
        EXPECT_EQ(serialize_category(back), text);
    }
}

TEST(category_io, file_round_trip) {
    auto path = std::filesystem::temp_directory_path() / "metaplectic_io_test.cat";
    save_category_file(builtin_category("su2_4"), path.string());
    Category back = load_category_file(path.string());
    EXPECT_EQ(back.name(), "su2_4");
    std::filesystem::remove(path);
    EXPECT_THROW(load_category_file(path.string()), std::ios_base::failure);
}

TEST(category_io, minimal_text) {
    Category cat = parse_category(kTiny);
    EXPECT_EQ(cat.name(), "z2");
    EXPECT_EQ(cat.num_labels(), 2);
    EXPECT_EQ(cat.fuse(1, 1), std::vector<LabelId>{0});
}

TEST(category_io, inadmissible_r_symbol) {
    int line = 0;
    EXPECT_EQ(parse_kind(std::string(kTiny) + "R 1 1 1 = 1 0\n", &line), CategoryParseError::Kind::kInadmissible);
    EXPECT_EQ(line, 8);
}

TEST(category_io, unknown_label) {
    EXPECT_EQ(parse_kind(std::string(kTiny) + "R 1 7 1 = 1 0\n"), CategoryParseError::Kind::kUnknownLabel);
}

TEST(category_io, malformed_and_truncated) {
    int line = 0;
    EXPECT_EQ(parse_kind(std::string(kTiny) + "R 1 1 0 = 1\n", &line), CategoryParseError::Kind::kMalformed);
    EXPECT_EQ(line, 8);
    EXPECT_EQ(parse_kind(std::string(kTiny) + "bogus line\n"), CategoryParseError::Kind::kMalformed);
    std::string full = serialize_category(builtin_category("su2_4"));
    std::string cut = full.substr(0, full.size() / 2);
    cut = cut.substr(0, cut.rfind('\n'));
    cut = cut.substr(0, cut.size() - 3);
    try {
        parse_category(cut);
        FAIL() << "truncated text parsed";
    } catch (const CategoryParseError &e) {
        EXPECT_GT(e.line(), 1);
        EXPECT_NE(std::string(e.what()).find("line "), std::string::npos);
    }
}

TEST(category_io, no_labels_is_incomplete) {
    EXPECT_EQ(parse_kind("# category empty\n"), CategoryParseError::Kind::kIncomplete);
}
