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

#ifndef METAPLECTIC_BRAID_REP_H
#define METAPLECTIC_BRAID_REP_H

#include <string>
#include <vector>

#include "metaplectic/category.h"
#include "metaplectic/fusion_space.h"
#include "metaplectic/linalg.h"

namespace metaplectic {

/// Matrices of the braid generators sigma_1..sigma_{n-1} on a fusion basis.
struct BraidRep {
    std::string category;
    FusionTreeBasis basis;
    std::vector<Unitary> generators;

    int n_strands() const {
        return static_cast<int>(generators.size()) + 1;
    }
    size_t dim() const {
        return basis.dim();
    }
    /// sigma_i for i in 1..n-1.
    const Unitary &sigma(int i) const;
};

/// Four-strand generators on ((a a)(a a))->b from the closed formulas:
/// sigma_1 = diag R^{aa}_{x_i}, sigma_3 = diag R^{aa}_{y_i}, and
///   (sigma_2)_{j,i} = sum_{c,d} F^{a a y_i}_{b; x_i c} (F^{aaa}_c)^{-1}_{y_i d}
///                     R^{aa}_d F^{aaa}_{c; d y_j} (F^{a a y_j}_b)^{-1}_{c x_j}
/// then conjugated by the basis signs.
BraidRep pair_tree_generators(const Category &cat, LabelId a, LabelId b);

/// Generators for an arbitrary tree with equal leaf labels. Each sigma_i is
/// computed in the left-nested basis by rotating leaves i, i+1 onto a common
/// fork, twisting with R, and rotating back; the result is carried to `basis`
/// by tree_change.
BraidRep general_generators(const Category &cat,
                            const FusionTreeBasis &basis,
                            MoveSchedule schedule = MoveSchedule::kLeftNested);

struct RepCheckReport {
    double unitarity_max = 0;
    double braid_max = 0;        // sigma_i sigma_{i+1} sigma_i vs sigma_{i+1} sigma_i sigma_{i+1}
    double far_commute_max = 0;  // [sigma_i, sigma_j] for |i-j| >= 2
    int braid_instances = 0;
    int far_commute_instances = 0;

    bool ok(double tol = 1e-9) const {
        return unitarity_max < tol && braid_max < tol && far_commute_max < tol;
    }
};

RepCheckReport rep_check(const BraidRep &rep);

}  // namespace metaplectic

#endif
