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

#include <algorithm>
#include <cmath>

namespace metaplectic {

FusionRules::FusionRules(int num_labels)
    : n_(num_labels), table_(static_cast<size_t>(num_labels * num_labels * num_labels), 0) {
}

void FusionRules::set(LabelId a, LabelId b, LabelId c, bool allowed) {
    table_.at(static_cast<size_t>((a * n_ + b) * n_ + c)) = allowed ? 1 : 0;
}

int FusionRules::multiplicity(LabelId a, LabelId b, LabelId c) const {
    if (a < 0 || b < 0 || c < 0 || a >= n_ || b >= n_ || c >= n_) {
        return 0;
    }
    return table_[static_cast<size_t>((a * n_ + b) * n_ + c)];
}

std::vector<LabelId> FusionRules::fuse(LabelId a, LabelId b) const {
    std::vector<LabelId> out;
    for (LabelId c = 0; c < n_; c++) {
        if (multiplicity(a, b, c)) {
            out.push_back(c);
        }
    }
    return out;
}

Category::Category(std::string name,
                   std::vector<Label> labels,
                   FusionRules fusion,
                   FSymbolTable f,
                   RSymbolTable r,
                   std::map<std::string, double> constants)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      fusion_(std::move(fusion)),
      f_(std::move(f)),
      r_(std::move(r)),
      constants_(std::move(constants)) {
    if (fusion_.size() != num_labels()) {
        throw std::invalid_argument("Category: fusion table size does not match label count");
    }
    if (labels_.empty()) {
        throw std::invalid_argument("Category: no labels");
    }
    for (LabelId a = 0; a < num_labels(); a++) {
        if (fusion_.fuse(unit(), a) != std::vector<LabelId>{a}) {
            throw std::invalid_argument("Category: label 0 is not a fusion unit");
        }
    }
    for (const auto &[key, block] : f_) {
        auto rows = f_rows(key.a, key.b, key.c, key.d);
        auto cols = f_cols(key.a, key.b, key.c, key.d);
        if (rows.empty()) {
            throw InadmissibleError("Category: F entry for inadmissible tuple " +
                                    describe_f(key.a, key.b, key.c, key.d));
        }
        if (static_cast<size_t>(block.rows()) != rows.size() ||
            static_cast<size_t>(block.cols()) != cols.size()) {
            throw InadmissibleError("Category: F block " + describe_f(key.a, key.b, key.c, key.d) +
                                    " has the wrong shape");
        }
    }
    for (const auto &[key, value] : r_) {
        if (!fusion_.admissible(key.a, key.b, key.c)) {
            throw InadmissibleError("Category: R entry for inadmissible tuple (" + label_name(key.a) +
                                    "," + label_name(key.b) + ";" + label_name(key.c) + ")");
        }
    }
}

std::optional<LabelId> Category::find_label(std::string_view name) const {
    for (LabelId id = 0; id < num_labels(); id++) {
        if (labels_[static_cast<size_t>(id)].name == name) {
            return id;
        }
    }
    for (LabelId id = 0; id < num_labels(); id++) {
        for (const auto &alias : labels_[static_cast<size_t>(id)].aliases) {
            if (alias == name) {
                return id;
            }
        }
    }
    return std::nullopt;
}

LabelId Category::label_id(std::string_view name) const {
    auto id = find_label(name);
    if (!id) {
        throw std::invalid_argument("unknown label '" + std::string(name) + "' in category " + name_);
    }
    return *id;
}

std::vector<LabelId> Category::f_rows(LabelId a, LabelId b, LabelId c, LabelId d) const {
    std::vector<LabelId> out;
    for (LabelId n = 0; n < num_labels(); n++) {
        if (fusion_.admissible(a, b, n) && fusion_.admissible(n, c, d)) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<LabelId> Category::f_cols(LabelId a, LabelId b, LabelId c, LabelId d) const {
    std::vector<LabelId> out;
    for (LabelId m = 0; m < num_labels(); m++) {
        if (fusion_.admissible(b, c, m) && fusion_.admissible(a, m, d)) {
            out.push_back(m);
        }
    }
    return out;
}

std::string Category::describe_f(LabelId a, LabelId b, LabelId c, LabelId d) const {
    auto nm = [&](LabelId x) {
        return (x >= 0 && x < num_labels()) ? label_name(x) : std::string("?");
    };
    return "F^{" + nm(a) + " " + nm(b) + " " + nm(c) + "}_{" + nm(d) + "}";
}

std::optional<Matrix> Category::f_matrix(LabelId a, LabelId b, LabelId c, LabelId d) const {
    auto rows = f_rows(a, b, c, d);
    if (rows.empty()) {
        throw InadmissibleError("inadmissible tuple " + describe_f(a, b, c, d));
    }
    auto it = f_.find(FKey{a, b, c, d});
    if (it != f_.end()) {
        return it->second;
    }
    if (a == unit() || b == unit() || c == unit()) {
        return Matrix::Identity(1, 1);
    }
    return std::nullopt;
}

Matrix Category::f_matrix_required(LabelId a, LabelId b, LabelId c, LabelId d) const {
    auto m = f_matrix(a, b, c, d);
    if (!m) {
        throw MissingDataError(name_ + ": no data for " + describe_f(a, b, c, d));
    }
    return *std::move(m);
}

Complex Category::f_entry(LabelId a, LabelId b, LabelId c, LabelId d, LabelId n, LabelId m) const {
    if (!fusion_.admissible(a, b, n) || !fusion_.admissible(n, c, d) || !fusion_.admissible(b, c, m) ||
        !fusion_.admissible(a, m, d)) {
        return 0;
    }
    auto rows = f_rows(a, b, c, d);
    auto cols = f_cols(a, b, c, d);
    Matrix block = f_matrix_required(a, b, c, d);
    auto r = std::find(rows.begin(), rows.end(), n) - rows.begin();
    auto k = std::find(cols.begin(), cols.end(), m) - cols.begin();
    return block(r, k);
}

std::optional<Complex> Category::r_symbol(LabelId a, LabelId b, LabelId c) const {
    if (!fusion_.admissible(a, b, c)) {
        throw InadmissibleError("inadmissible R^{" + label_name(a) + " " + label_name(b) + "}_{" +
                                label_name(c) + "}");
    }
    auto it = r_.find(RKey{a, b, c});
    if (it != r_.end()) {
        return it->second;
    }
    if (a == unit() || b == unit()) {
        return Complex{1.0, 0.0};
    }
    return std::nullopt;
}

Complex Category::r_required(LabelId a, LabelId b, LabelId c) const {
    auto r = r_symbol(a, b, c);
    if (!r) {
        throw MissingDataError(name_ + ": no data for R^{" + label_name(a) + " " + label_name(b) + "}_{" +
                               label_name(c) + "}");
    }
    return *r;
}

namespace {

void check_fusion(const Category &cat, ConsistencyReport &rep) {
    const auto &N = cat.fusion();
    int n = cat.num_labels();
    for (LabelId a = 0; a < n; a++) {
        if (N.fuse(cat.unit(), a) != std::vector<LabelId>{a}) {
            rep.fusion_unit = false;
        }
        for (LabelId b = 0; b < n; b++) {
            if (N.fuse(a, b) != N.fuse(b, a)) {
                rep.fusion_commutative = false;
            }
            double sum = 0;
            for (LabelId c : N.fuse(a, b)) {
                sum += cat.qdim(c);
            }
            rep.fusion_dimension_max = std::max(rep.fusion_dimension_max, std::abs(cat.qdim(a) * cat.qdim(b) - sum));
            for (LabelId c = 0; c < n; c++) {
                for (LabelId d = 0; d < n; d++) {
                    int left = 0;
                    int right = 0;
                    for (LabelId e = 0; e < n; e++) {
                        left += N.multiplicity(a, b, e) * N.multiplicity(e, c, d);
                        right += N.multiplicity(b, c, e) * N.multiplicity(a, e, d);
                    }
                    if (left != right) {
                        rep.fusion_associativity_failures++;
                    }
                }
            }
        }
    }
}

void check_tables(const Category &cat, ConsistencyReport &rep) {
    for (const auto &[key, block] : cat.stored_f()) {
        rep.unitarity_max = std::max(rep.unitarity_max, unitarity_residual(block));
    }
    for (const auto &[key, value] : cat.stored_r()) {
        rep.r_modulus_max = std::max(rep.r_modulus_max, std::abs(std::abs(value) - 1.0));
    }
    int n = cat.num_labels();
    for (LabelId a = 0; a < n; a++) {
        for (LabelId b = 0; b < n; b++) {
            for (LabelId c : cat.fuse(a, b)) {
                if (!cat.r_symbol(a, b, c)) {
                    rep.r_missing++;
                }
            }
            for (LabelId c = 0; c < n; c++) {
                for (LabelId d = 0; d < n; d++) {
                    if (cat.f_admissible(a, b, c, d) && !cat.f_matrix(a, b, c, d)) {
                        rep.f_missing++;
                    }
                }
            }
        }
    }
}

// F^{fcd}_{e;gl} F^{abl}_{e;fk} = sum_h F^{abc}_{g;fh} F^{ahd}_{e;gk} F^{bcd}_{k;hl}
void check_pentagon(const Category &cat, ConsistencyReport &rep) {
    int n = cat.num_labels();
    for (LabelId a = 0; a < n; a++)
    for (LabelId b = 0; b < n; b++)
    for (LabelId c = 0; c < n; c++)
    for (LabelId d = 0; d < n; d++)
    for (LabelId f : cat.fuse(a, b))
    for (LabelId g : cat.fuse(f, c))
    for (LabelId e : cat.fuse(g, d))
    for (LabelId l : cat.fuse(c, d))
    for (LabelId k : cat.fuse(b, l)) {
        if (!cat.fusion().admissible(a, k, e)) {
            continue;
        }
        try {
            Complex lhs = cat.f_entry(f, c, d, e, g, l) * cat.f_entry(a, b, l, e, f, k);
            Complex rhs = 0;
            for (LabelId h = 0; h < n; h++) {
                if (!cat.fusion().admissible(b, c, h)) {
                    continue;
                }
                rhs += cat.f_entry(a, b, c, g, f, h) * cat.f_entry(a, h, d, e, g, k) *
                       cat.f_entry(b, c, d, k, h, l);
            }
            rep.pentagon_max = std::max(rep.pentagon_max, std::abs(lhs - rhs));
            rep.pentagon_evaluated++;
        } catch (const MissingDataError &) {
            rep.pentagon_skipped++;
        }
    }
}

// R^{ca}_e F^{acb}_{d;eg} R^{cb}_g = sum_f F^{cab}_{d;ef} R^{cf}_d F^{abc}_{d;fg}
void check_hexagon(const Category &cat, ConsistencyReport &rep) {
    int n = cat.num_labels();
    for (LabelId a = 0; a < n; a++)
    for (LabelId b = 0; b < n; b++)
    for (LabelId c = 0; c < n; c++)
    for (LabelId d = 0; d < n; d++)
    for (LabelId e : cat.fuse(a, c))
    for (LabelId g : cat.fuse(c, b)) {
        if (!cat.fusion().admissible(e, b, d) || !cat.fusion().admissible(a, g, d)) {
            continue;
        }
        try {
            for (int orientation = 0; orientation < 2; orientation++) {
                auto R = [&](LabelId x, LabelId y, LabelId z) {
                    Complex v = cat.r_required(x, y, z);
                    return orientation == 0 ? v : 1.0 / v;
                };
                Complex lhs = R(c, a, e) * cat.f_entry(a, c, b, d, e, g) * R(c, b, g);
                Complex rhs = 0;
                for (LabelId f : cat.fuse(a, b)) {
                    if (!cat.fusion().admissible(c, f, d)) {
                        continue;
                    }
                    rhs += cat.f_entry(c, a, b, d, e, f) * R(c, f, d) * cat.f_entry(a, b, c, d, f, g);
                }
                double &slot = orientation == 0 ? rep.hexagon_max_r : rep.hexagon_max_rinv;
                slot = std::max(slot, std::abs(lhs - rhs));
            }
            rep.hexagon_evaluated++;
        } catch (const MissingDataError &) {
            rep.hexagon_skipped++;
        }
    }
    if (rep.hexagon_max_rinv < rep.hexagon_max_r) {
        rep.hexagon_orientation = "R^-1";
        rep.hexagon_max = rep.hexagon_max_rinv;
    } else {
        rep.hexagon_orientation = "R";
        rep.hexagon_max = rep.hexagon_max_r;
    }
}

}  // namespace

ConsistencyReport check_consistency(const Category &cat) {
    ConsistencyReport rep;
    check_fusion(cat, rep);
    check_tables(cat, rep);
    check_pentagon(cat, rep);
    check_hexagon(cat, rep);
    return rep;
}

}  // namespace metaplectic
