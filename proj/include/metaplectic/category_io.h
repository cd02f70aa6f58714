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

#ifndef METAPLECTIC_CATEGORY_IO_H
#define METAPLECTIC_CATEGORY_IO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "metaplectic/category.h"

namespace metaplectic {

/// Line-oriented text format:
///
///   # category <name>
///   label <name> qdim <decimal>
///   fuse <a> <b> -> <c>[,<c>...]
///   F <a> <b> <c> <d> : <n> <m> = <re> <im>
///   R <a> <b> <c> = <re> <im>
///
/// '#' starts a comment. The first "# category" comment names the category.
class CategoryParseError : public std::runtime_error {
   public:
    enum class Kind { kMalformed, kInadmissible, kIncomplete, kUnknownLabel };

    CategoryParseError(Kind kind, int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {
    }

    Kind kind() const {
        return kind_;
    }
    int line() const {
        return line_;
    }

   private:
    Kind kind_;
    int line_;
};

/// Writes every label, fusion channel, stored F entry and stored R symbol.
/// Decimals carry 17 significant digits.
std::string serialize_category(const Category &cat);

Category parse_category(std::string_view text);

Category load_category_file(const std::string &path);
void save_category_file(const Category &cat, const std::string &path);

}  // namespace metaplectic

#endif
