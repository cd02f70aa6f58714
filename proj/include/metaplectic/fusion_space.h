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

#ifndef METAPLECTIC_FUSION_SPACE_H
#define METAPLECTIC_FUSION_SPACE_H

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metaplectic/category.h"

namespace metaplectic {

/// Full binary tree over ordered, labeled leaves. Leaves are nodes too; node
/// ids are stable under rotations, so a per-node label vector can follow a
/// tree through a sequence of F-moves.
class TreeShape {
   public:
    struct Node {
        int left = -1;
        int right = -1;
        int leaf = -1;  // leaf position when >= 0

        bool is_leaf() const {
            return leaf >= 0;
        }
    };

    static TreeShape leaf(LabelId label);
    static TreeShape join(const TreeShape &left, const TreeShape &right);
    /// ((a a)(a a))
    static TreeShape pair_tree(LabelId a);
    /// (((a a) a) ... a) over n leaves.
    static TreeShape left_nested(int n, LabelId a);

    int num_leaves() const {
        return static_cast<int>(leaf_labels_.size());
    }
    int num_nodes() const {
        return static_cast<int>(nodes_.size());
    }
    const std::vector<LabelId> &leaf_labels() const {
        return leaf_labels_;
    }
    const std::vector<Node> &nodes() const {
        return nodes_;
    }
    const Node &node(int id) const {
        return nodes_.at(static_cast<size_t>(id));
    }
    int root() const {
        return root_;
    }
    /// Node id of leaf position i.
    int leaf_node(int i) const;
    /// Parent node id, -1 for the root.
    int parent(int id) const;
    /// All node ids in preorder (node, left subtree, right subtree).
    std::vector<int> preorder() const;
    /// Internal node ids in preorder, root excluded.
    std::vector<int> internal_edges() const;

    /// Same bracketing and leaf labels, ignoring node ids.
    bool same_structure(const TreeShape &other) const;

    /// Right rotation at v: (( A B ) C ) -> ( A ( B C )). The left child's id is
    /// reused for the new (B C) node.
    TreeShape rotated_right(int v) const;
    /// Left rotation at v: ( A ( B C )) -> (( A B ) C ).
    TreeShape rotated_left(int v) const;

    /// Nested-parentheses rendering, e.g. "((eps eps)(eps eps))".
    std::string to_string(const Category &cat) const;

   private:
    std::vector<Node> nodes_;
    std::vector<LabelId> leaf_labels_;
    int root_ = -1;
};

/// Parses "((eps eps)(eps eps))->y". Returns the shape and the total charge.
std::pair<TreeShape, LabelId> parse_tree_shape(const Category &cat, std::string_view text);

/// Basis of a fusion space: admissible labelings of a tree with a fixed root.
struct FusionTreeBasis {
    TreeShape shape;
    LabelId total = 0;
    /// Per state, one label per node id (leaves and root included).
    std::vector<std::vector<LabelId>> states;
    /// Computational-basis sign of each state.
    std::vector<int> signs;

    size_t dim() const {
        return states.size();
    }
    /// Labels of internal_edges() for state i, e.g. {x, y} for a pair tree.
    std::vector<LabelId> edge_labels(size_t i) const;
    std::optional<size_t> find(const std::vector<LabelId> &node_labels) const;
    /// "-|2 2>" style description of state i.
    std::string state_name(const Category &cat, size_t i) const;
    /// diag(signs)
    Matrix sign_matrix() const;
};

/// All admissible labelings. States are ordered lexicographically by
/// edge_labels() in label order with all signs +1, except for the two
/// registered computational models, whose basis order and signs are frozen:
///   su2_4 ((eps eps)(eps eps))->y  : {-|YY>, |1Y>, |Y1>}
///   so5_2 ((eps eps)(eps eps))->y1 : {|Y2Y2>, |1Y1>, |Y2Y1>, |Y1Y2>, |Y11>}
FusionTreeBasis enumerate_basis(const Category &cat, const TreeShape &shape, LabelId total);

/// Same as enumerate_basis but always lexicographic with + signs.
FusionTreeBasis enumerate_lexicographic(const Category &cat, const TreeShape &shape, LabelId total);

/// Dimension of the space of n leaves labeled a with total b, by the path
/// recursion over the fusion graph.
long long path_count(const Category &cat, const std::vector<LabelId> &leaves, LabelId total);

/// A linear map between the coordinate spaces of two bases.
struct BasisMove {
    FusionTreeBasis basis;  // target basis (lexicographic, + signs)
    Matrix map;             // map * (unsigned source coords) = target coords
};

/// One elementary F-move at node v. Source coordinates are unsigned.
BasisMove rotate_right(const Category &cat, const FusionTreeBasis &from, int v);
BasisMove rotate_left(const Category &cat, const FusionTreeBasis &from, int v);

enum class MoveSchedule {
    kLeftNested,   // rotate the first (preorder) node with an internal right child
    kRightNested,  // rotate the first (preorder) node with an internal left child
};

/// Composite of F-moves bringing `from` to the canonical nested shape.
/// Source coordinates are unsigned.
BasisMove to_canonical(const Category &cat, const FusionTreeBasis &from, MoveSchedule schedule);

/// Change of basis from `from` coordinates to `to` coordinates (signs
/// included), composed of elementary F-moves routed through the canonical
/// nested shape. Throws std::invalid_argument on leaf/total mismatch and
/// MissingDataError when an F-block is unavailable.
Isometry tree_change(const Category &cat,
                     const FusionTreeBasis &from,
                     const FusionTreeBasis &to,
                     MoveSchedule schedule = MoveSchedule::kLeftNested);

struct BlockEmbedding {
    FusionTreeBasis block;  // per-block basis
    FusionTreeBasis full;   // basis of the joined tree
    Isometry map;           // full.dim() x block.dim()^n_blocks
};

/// Embeds (block space)^{(x) n_blocks} into the space of the joined tree by
/// coordinate inclusion of labelings whose block roots carry block_total.
/// Column index is i_1 * d^{n-1} + ... + i_n, entries are the product of the
/// block basis signs. n_blocks must be 1 or 2.
BlockEmbedding block_embedding(const Category &cat,
                               const TreeShape &block_shape,
                               LabelId block_total,
                               int n_blocks,
                               LabelId total);

}  // namespace metaplectic

#endif
