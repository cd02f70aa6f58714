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

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace metaplectic {

const Unitary &BraidRep::sigma(int i) const {
    if (i < 1 || i > static_cast<int>(generators.size())) {
        throw std::out_of_range("sigma index " + std::to_string(i) + " outside 1.." +
                                std::to_string(generators.size()));
    }
    return generators[static_cast<size_t>(i - 1)];
}

namespace {

// (F^{abc}_d)^{-1} entry at (col-channel m, row-channel n); 0 when inadmissible.
Complex f_inverse_entry(const Category &cat, LabelId a, LabelId b, LabelId c, LabelId d, LabelId m, LabelId n) {
    auto rows = cat.f_rows(a, b, c, d);
    auto cols = cat.f_cols(a, b, c, d);
    auto r = std::find(rows.begin(), rows.end(), n);
    auto k = std::find(cols.begin(), cols.end(), m);
    if (r == rows.end() || k == cols.end()) {
        return 0;
    }
    Matrix inv = cat.f_matrix_required(a, b, c, d).inverse();
    return inv(k - cols.begin(), r - rows.begin());
}

void require_equal_leaves(const Category &cat, const TreeShape &shape) {
    const auto &leaves = shape.leaf_labels();
    if (std::adjacent_find(leaves.begin(), leaves.end(), std::not_equal_to<>()) != leaves.end()) {
        throw std::invalid_argument("braid generators need equal leaf labels, got " + shape.to_string(cat));
    }
}

}  // namespace

BraidRep pair_tree_generators(const Category &cat, LabelId a, LabelId b) {
    BraidRep rep;
    rep.category = cat.name();
    rep.basis = enumerate_basis(cat, TreeShape::pair_tree(a), b);
    const auto &basis = rep.basis;
    auto n = static_cast<Eigen::Index>(basis.dim());
    std::vector<LabelId> x, y;
    for (size_t i = 0; i < basis.dim(); i++) {
        auto e = basis.edge_labels(i);
        x.push_back(e[0]);
        y.push_back(e[1]);
    }
    Matrix s1 = Matrix::Zero(n, n);
    Matrix s2 = Matrix::Zero(n, n);
    Matrix s3 = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        auto ui = static_cast<size_t>(i);
        s1(i, i) = cat.r_required(a, a, x[ui]);
        s3(i, i) = cat.r_required(a, a, y[ui]);
    }
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            auto ui = static_cast<size_t>(i);
            auto uj = static_cast<size_t>(j);
            Complex sum = 0;
            for (LabelId c : cat.fuse(a, y[ui])) {
                if (!cat.fusion().admissible(a, y[uj], c)) {
                    continue;
                }
                for (LabelId d : cat.fuse(a, a)) {
                    if (!cat.fusion().admissible(d, a, c)) {
                        continue;
                    }
                    sum += cat.f_entry(a, a, y[ui], b, x[ui], c) * f_inverse_entry(cat, a, a, a, c, y[ui], d) *
                           cat.r_required(a, a, d) * cat.f_entry(a, a, a, c, d, y[uj]) *
                           f_inverse_entry(cat, a, a, y[uj], b, c, x[uj]);
                }
            }
            s2(j, i) = sum;
        }
    }
    Matrix sg = basis.sign_matrix();
    rep.generators = {sg * s1 * sg, sg * s2 * sg, sg * s3 * sg};
    return rep;
}

BraidRep general_generators(const Category &cat, const FusionTreeBasis &basis, MoveSchedule schedule) {
    const TreeShape &shape = basis.shape;
    if (shape.num_leaves() < 2) {
        throw std::invalid_argument("general_generators: need at least two strands");
    }
    require_equal_leaves(cat, shape);
    LabelId a = shape.leaf_labels()[0];
    int n = shape.num_leaves();

    FusionTreeBasis nested = enumerate_lexicographic(cat, TreeShape::left_nested(n, a), basis.total);
    Matrix to_nested = tree_change(cat, basis, nested, schedule);
    Matrix from_nested = tree_change(cat, nested, basis, schedule);
    const TreeShape &ln = nested.shape;
    auto dim = static_cast<Eigen::Index>(nested.dim());

    BraidRep rep;
    rep.category = cat.name();
    rep.basis = basis;
    for (int i = 1; i < n; i++) {
        Matrix local;
        if (i == 1) {
            int fork = ln.parent(ln.leaf_node(0));
            local = Matrix::Zero(dim, dim);
            for (Eigen::Index s = 0; s < dim; s++) {
                local(s, s) = cat.r_required(a, a, nested.states[static_cast<size_t>(s)][static_cast<size_t>(fork)]);
            }
        } else {
            int p = ln.parent(ln.leaf_node(i));
            BasisMove move = rotate_right(cat, nested, p);
            int fork = ln.node(p).left;  // reused id of the new (leaf_{i-1} leaf_i) node
            auto rdim = static_cast<Eigen::Index>(move.basis.dim());
            Matrix twist = Matrix::Zero(rdim, rdim);
            for (Eigen::Index s = 0; s < rdim; s++) {
                twist(s, s) =
                    cat.r_required(a, a, move.basis.states[static_cast<size_t>(s)][static_cast<size_t>(fork)]);
            }
            local = move.map.inverse() * twist * move.map;
        }
        rep.generators.push_back(from_nested * local * to_nested);
    }
    return rep;
}

RepCheckReport rep_check(const BraidRep &rep) {
    RepCheckReport out;
    int m = static_cast<int>(rep.generators.size());
    for (const auto &g : rep.generators) {
        out.unitarity_max = std::max(out.unitarity_max, unitarity_residual(g));
    }
    for (int i = 1; i + 1 <= m; i++) {
        const Matrix &a = rep.sigma(i);
        const Matrix &b = rep.sigma(i + 1);
        out.braid_max = std::max(out.braid_max, max_abs_diff(a * b * a, b * a * b));
        out.braid_instances++;
    }
    for (int i = 1; i <= m; i++) {
        for (int j = i + 2; j <= m; j++) {
            const Matrix &a = rep.sigma(i);
            const Matrix &b = rep.sigma(j);
            out.far_commute_max = std::max(out.far_commute_max, max_abs_diff(a * b, b * a));
            out.far_commute_instances++;
        }
    }
    return out;
}

}  // namespace metaplectic
