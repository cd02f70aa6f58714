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

#ifndef METAPLECTIC_CATEGORY_H
#define METAPLECTIC_CATEGORY_H

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metaplectic/linalg.h"

namespace metaplectic {

/// Index into Category::labels(). Label 0 is always the unit.
using LabelId = int;

/// Raised when an operation needs an F- or R-symbol the category does not
/// carry. The SO(5)_2 tables are partial, so callers are expected to catch
/// this and count or report it.
class MissingDataError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised for a fusion tuple that violates the fusion rules.
class InadmissibleError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct Label {
    std::string name;
    double qdim = 1.0;
    std::vector<std::string> aliases;
};

/// Multiplicity-free fusion rules N^{ab}_c in {0, 1}.
class FusionRules {
   public:
    FusionRules() = default;
    explicit FusionRules(int num_labels);

    int size() const {
        return n_;
    }
    void set(LabelId a, LabelId b, LabelId c, bool allowed);
    int multiplicity(LabelId a, LabelId b, LabelId c) const;
    bool admissible(LabelId a, LabelId b, LabelId c) const {
        return multiplicity(a, b, c) != 0;
    }
    /// Channels of a (x) b in label order.
    std::vector<LabelId> fuse(LabelId a, LabelId b) const;

    bool operator==(const FusionRules &other) const = default;

   private:
    int n_ = 0;
    std::vector<unsigned char> table_;
};

struct FKey {
    LabelId a, b, c, d;
    auto operator<=>(const FKey &) const = default;
};

struct RKey {
    LabelId a, b, c;
    auto operator<=>(const RKey &) const = default;
};

/// F^{abc}_d blocks. Row n runs over the (ab) channel, column m over the (bc)
/// channel, both in label order, and
///   |((ab)_n c)_d> = sum_m F_{nm} |(a(bc)_m)_d>.
using FSymbolTable = std::map<FKey, Matrix>;

/// R^{ab}_c phases.
using RSymbolTable = std::map<RKey, Complex>;

/// Immutable unitary modular category data: labels, fusion rules, F and R
/// tables. Absent F/R entries are "missing" unless covered by the unit-label
/// convention (F^{abc}_d = (1) and R^{ab}_c = 1 whenever a, b or c is the unit).
class Category {
   public:
    Category(std::string name,
             std::vector<Label> labels,
             FusionRules fusion,
             FSymbolTable f,
             RSymbolTable r,
             std::map<std::string, double> constants = {});

    const std::string &name() const {
        return name_;
    }
    int num_labels() const {
        return static_cast<int>(labels_.size());
    }
    const std::vector<Label> &labels() const {
        return labels_;
    }
    const Label &label(LabelId id) const {
        return labels_.at(static_cast<size_t>(id));
    }
    double qdim(LabelId id) const {
        return label(id).qdim;
    }
    LabelId unit() const {
        return 0;
    }
    /// Looks up a label by name or alias.
    std::optional<LabelId> find_label(std::string_view name) const;
    /// Same as find_label but throws std::invalid_argument for unknown names.
    LabelId label_id(std::string_view name) const;
    const std::string &label_name(LabelId id) const {
        return label(id).name;
    }

    const FusionRules &fusion() const {
        return fusion_;
    }
    std::vector<LabelId> fuse(LabelId a, LabelId b) const {
        return fusion_.fuse(a, b);
    }

    /// Admissible (ab) channels n of F^{abc}_d.
    std::vector<LabelId> f_rows(LabelId a, LabelId b, LabelId c, LabelId d) const;
    /// Admissible (bc) channels m of F^{abc}_d.
    std::vector<LabelId> f_cols(LabelId a, LabelId b, LabelId c, LabelId d) const;
    bool f_admissible(LabelId a, LabelId b, LabelId c, LabelId d) const {
        return !f_rows(a, b, c, d).empty();
    }

    /// The F^{abc}_d block, nullopt when missing. Throws InadmissibleError if
    /// the tuple is inadmissible.
    std::optional<Matrix> f_matrix(LabelId a, LabelId b, LabelId c, LabelId d) const;
    /// As f_matrix, but a missing block throws MissingDataError.
    Matrix f_matrix_required(LabelId a, LabelId b, LabelId c, LabelId d) const;
    /// Entry F^{abc}_{d;nm}; zero when n or m is not an admissible channel.
    /// Throws MissingDataError if the block exists but is not stored.
    Complex f_entry(LabelId a, LabelId b, LabelId c, LabelId d, LabelId n, LabelId m) const;

    /// R^{ab}_c, nullopt when missing. Throws InadmissibleError if c is not in a (x) b.
    std::optional<Complex> r_symbol(LabelId a, LabelId b, LabelId c) const;
    Complex r_required(LabelId a, LabelId b, LabelId c) const;

    const FSymbolTable &stored_f() const {
        return f_;
    }
    const RSymbolTable &stored_r() const {
        return r_;
    }
    const std::map<std::string, double> &constants() const {
        return constants_;
    }

    std::string describe_f(LabelId a, LabelId b, LabelId c, LabelId d) const;

   private:
    std::string name_;
    std::vector<Label> labels_;
    FusionRules fusion_;
    FSymbolTable f_;
    RSymbolTable r_;
    std::map<std::string, double> constants_;
};

/// "su2_4" (= SO(3)_2) or "so5_2". Throws std::invalid_argument otherwise.
Category builtin_category(std::string_view name);

std::vector<std::string> builtin_category_names();

/// Fusion rules of SO(p)_2, p = 2r + 1, over the symbolic labels
/// {1, z, y_1..y_r, eps, eps'} in that order.
FusionRules metaplectic_fusion_rules(int r);

struct ConsistencyReport {
    // Fusion-rule checks.
    bool fusion_commutative = true;
    bool fusion_unit = true;
    int fusion_associativity_failures = 0;
    double fusion_dimension_max = 0;  // max |d_a d_b - sum_c N^{ab}_c d_c|

    // Pentagon, over every admissible (a,b,c,d,e; f,g,k,l) instance.
    double pentagon_max = 0;
    long long pentagon_evaluated = 0;
    long long pentagon_skipped = 0;

    // Hexagon, evaluated with R and with R^{-1}; the better one is reported.
    double hexagon_max_r = 0;
    double hexagon_max_rinv = 0;
    double hexagon_max = 0;
    std::string hexagon_orientation = "R";
    long long hexagon_evaluated = 0;
    long long hexagon_skipped = 0;

    double unitarity_max = 0;     // over stored F blocks
    double r_modulus_max = 0;     // max | |R| - 1 | over stored R symbols
    long long f_missing = 0;      // admissible F blocks with no data
    long long r_missing = 0;      // admissible R symbols with no data

    long long skips() const {
        return pentagon_skipped + hexagon_skipped;
    }
};

ConsistencyReport check_consistency(const Category &cat);

}  // namespace metaplectic

#endif
