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

#include "metaplectic/fusion_space.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace metaplectic {

TreeShape TreeShape::leaf(LabelId label) {
    TreeShape t;
    t.nodes_.push_back(Node{-1, -1, 0});
    t.leaf_labels_.push_back(label);
    t.root_ = 0;
    return t;
}

TreeShape TreeShape::join(const TreeShape &left, const TreeShape &right) {
    TreeShape t;
    int offset = left.num_nodes();
    int leaf_offset = left.num_leaves();
    t.nodes_ = left.nodes_;
    for (Node n : right.nodes_) {
        if (n.is_leaf()) {
            n.leaf += leaf_offset;
        } else {
            n.left += offset;
            n.right += offset;
        }
        t.nodes_.push_back(n);
    }
    t.leaf_labels_ = left.leaf_labels_;
    t.leaf_labels_.insert(t.leaf_labels_.end(), right.leaf_labels_.begin(), right.leaf_labels_.end());
    t.nodes_.push_back(Node{left.root_, right.root_ + offset, -1});
    t.root_ = t.num_nodes() - 1;
    return t;
}

TreeShape TreeShape::pair_tree(LabelId a) {
    return join(join(leaf(a), leaf(a)), join(leaf(a), leaf(a)));
}

TreeShape TreeShape::left_nested(int n, LabelId a) {
    if (n < 1) {
        throw std::invalid_argument("left_nested: need at least one leaf");
    }
    TreeShape t = leaf(a);
    for (int i = 1; i < n; i++) {
        t = join(t, leaf(a));
    }
    return t;
}

int TreeShape::leaf_node(int i) const {
    for (int id = 0; id < num_nodes(); id++) {
        if (nodes_[static_cast<size_t>(id)].leaf == i) {
            return id;
        }
    }
    throw std::out_of_range("TreeShape: leaf position out of range");
}

int TreeShape::parent(int id) const {
    for (int p = 0; p < num_nodes(); p++) {
        const Node &n = nodes_[static_cast<size_t>(p)];
        if (!n.is_leaf() && (n.left == id || n.right == id)) {
            return p;
        }
    }
    return -1;
}

std::vector<int> TreeShape::preorder() const {
    std::vector<int> out;
    std::function<void(int)> walk = [&](int id) {
        out.push_back(id);
        const Node &n = node(id);
        if (!n.is_leaf()) {
            walk(n.left);
            walk(n.right);
        }
    };
    walk(root_);
    return out;
}

std::vector<int> TreeShape::internal_edges() const {
    std::vector<int> out;
    for (int id : preorder()) {
        if (id != root_ && !node(id).is_leaf()) {
            out.push_back(id);
        }
    }
    return out;
}

bool TreeShape::same_structure(const TreeShape &other) const {
    if (leaf_labels_ != other.leaf_labels_) {
        return false;
    }
    std::function<bool(int, int)> eq = [&](int a, int b) {
        const Node &x = node(a);
        const Node &y = other.node(b);
        if (x.is_leaf() || y.is_leaf()) {
            return x.leaf == y.leaf;
        }
        return eq(x.left, y.left) && eq(x.right, y.right);
    };
    return eq(root_, other.root_);
}

TreeShape TreeShape::rotated_right(int v) const {
    TreeShape t = *this;
    Node &top = t.nodes_.at(static_cast<size_t>(v));
    if (top.is_leaf() || node(top.left).is_leaf()) {
        throw std::invalid_argument("rotated_right: left child must be internal");
    }
    int l = top.left;
    Node &mid = t.nodes_[static_cast<size_t>(l)];
    int a = mid.left;
    int b = mid.right;
    int c = top.right;
    mid.left = b;
    mid.right = c;
    top.left = a;
    top.right = l;
    return t;
}

TreeShape TreeShape::rotated_left(int v) const {
    TreeShape t = *this;
    Node &top = t.nodes_.at(static_cast<size_t>(v));
    if (top.is_leaf() || node(top.right).is_leaf()) {
        throw std::invalid_argument("rotated_left: right child must be internal");
    }
    int r = top.right;
    Node &mid = t.nodes_[static_cast<size_t>(r)];
    int a = top.left;
    int b = mid.left;
    int c = mid.right;
    mid.left = a;
    mid.right = b;
    top.left = r;
    top.right = c;
    return t;
}

std::string TreeShape::to_string(const Category &cat) const {
    std::function<std::string(int)> render = [&](int id) -> std::string {
        const Node &n = node(id);
        if (n.is_leaf()) {
            return cat.label_name(leaf_labels_[static_cast<size_t>(n.leaf)]);
        }
        std::string l = render(n.left);
        std::string r = render(n.right);
        bool l_leaf = node(n.left).is_leaf();
        bool r_leaf = node(n.right).is_leaf();
        return "(" + l + ((l_leaf || r_leaf) ? " " : "") + r + ")";
    };
    return render(root_);
}

std::pair<TreeShape, LabelId> parse_tree_shape(const Category &cat, std::string_view text) {
    auto arrow = text.find("->");
    if (arrow == std::string_view::npos) {
        throw std::invalid_argument("tree shape needs '->total': '" + std::string(text) + "'");
    }
    std::string_view body = text.substr(0, arrow);
    std::string total_name(text.substr(arrow + 2));
    total_name.erase(std::remove_if(total_name.begin(), total_name.end(), ::isspace), total_name.end());

    std::vector<std::string> tokens;
    std::string word;
    for (char ch : body) {
        if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!word.empty()) {
                tokens.push_back(word);
                word.clear();
            }
            if (ch == '(' || ch == ')') {
                tokens.emplace_back(1, ch);
            }
        } else {
            word += ch;
        }
    }
    if (!word.empty()) {
        tokens.push_back(word);
    }
    size_t pos = 0;
    std::function<TreeShape()> parse = [&]() -> TreeShape {
        if (pos >= tokens.size()) {
            throw std::invalid_argument("tree shape ended early: '" + std::string(text) + "'");
        }
        const std::string &tok = tokens[pos++];
        if (tok == ")") {
            throw std::invalid_argument("unexpected ')' in tree shape '" + std::string(text) + "'");
        }
        if (tok != "(") {
            return TreeShape::leaf(cat.label_id(tok));
        }
        TreeShape left = parse();
        TreeShape right = parse();
        if (pos >= tokens.size() || tokens[pos] != ")") {
            throw std::invalid_argument("tree shape nodes must be binary: '" + std::string(text) + "'");
        }
        pos++;
        return TreeShape::join(left, right);
    };
    TreeShape shape = parse();
    if (pos != tokens.size()) {
        throw std::invalid_argument("trailing tokens in tree shape '" + std::string(text) + "'");
    }
    if (shape.num_leaves() < 2) {
        throw std::invalid_argument("tree shape needs at least two leaves");
    }
    return {shape, cat.label_id(total_name)};
}

std::vector<LabelId> FusionTreeBasis::edge_labels(size_t i) const {
    std::vector<LabelId> out;
    for (int id : shape.internal_edges()) {
        out.push_back(states.at(i)[static_cast<size_t>(id)]);
    }
    return out;
}

std::optional<size_t> FusionTreeBasis::find(const std::vector<LabelId> &node_labels) const {
    for (size_t i = 0; i < states.size(); i++) {
        if (states[i] == node_labels) {
            return i;
        }
    }
    return std::nullopt;
}

std::string FusionTreeBasis::state_name(const Category &cat, size_t i) const {
    std::string out = signs.at(i) < 0 ? "-|" : "|";
    auto edges = edge_labels(i);
    for (size_t k = 0; k < edges.size(); k++) {
        out += (k ? " " : "") + cat.label_name(edges[k]);
    }
    return out + ">";
}

Matrix FusionTreeBasis::sign_matrix() const {
    Matrix s = Matrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
    for (size_t i = 0; i < dim(); i++) {
        s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = signs[i];
    }
    return s;
}

namespace {

using Labeling = std::vector<LabelId>;

std::vector<Labeling> enumerate_subtree(const Category &cat, const TreeShape &shape, int id) {
    const auto &n = shape.node(id);
    if (n.is_leaf()) {
        Labeling l(static_cast<size_t>(shape.num_nodes()), -1);
        l[static_cast<size_t>(id)] = shape.leaf_labels()[static_cast<size_t>(n.leaf)];
        return {l};
    }
    auto left = enumerate_subtree(cat, shape, n.left);
    auto right = enumerate_subtree(cat, shape, n.right);
    std::vector<Labeling> out;
    for (const auto &l : left) {
        for (const auto &r : right) {
            LabelId a = l[static_cast<size_t>(n.left)];
            LabelId b = r[static_cast<size_t>(n.right)];
            for (LabelId c : cat.fuse(a, b)) {
                Labeling merged = l;
                for (size_t k = 0; k < merged.size(); k++) {
                    if (r[k] >= 0) {
                        merged[k] = r[k];
                    }
                }
                merged[static_cast<size_t>(id)] = c;
                out.push_back(std::move(merged));
            }
        }
    }
    return out;
}

struct GoldenModel {
    std::string category;
    std::string leaf;
    std::string total;
    std::vector<std::pair<std::string, std::string>> order;  // (x, y) per state
    std::vector<int> signs;
};

const std::vector<GoldenModel> &golden_models() {
    static const std::vector<GoldenModel> models = {
        {"su2_4", "eps", "y", {{"y", "y"}, {"one", "y"}, {"y", "one"}}, {-1, 1, 1}},
        {"so5_2",
         "eps",
         "y1",
         {{"y2", "y2"}, {"1", "y1"}, {"y2", "y1"}, {"y1", "y2"}, {"y1", "1"}},
         {1, 1, 1, 1, 1}},
    };
    return models;
}

void apply_golden_order(const Category &cat, FusionTreeBasis &basis) {
    for (const auto &model : golden_models()) {
        if (model.category != cat.name()) {
            continue;
        }
        LabelId leaf = cat.label_id(model.leaf);
        if (basis.total != cat.label_id(model.total) || !basis.shape.same_structure(TreeShape::pair_tree(leaf))) {
            continue;
        }
        if (basis.dim() != model.order.size()) {
            throw std::logic_error("golden basis size mismatch for " + cat.name());
        }
        FusionTreeBasis ordered = basis;
        ordered.states.clear();
        ordered.signs = model.signs;
        for (const auto &[x, y] : model.order) {
            std::vector<LabelId> want = {cat.label_id(x), cat.label_id(y)};
            bool found = false;
            for (size_t i = 0; i < basis.dim(); i++) {
                if (basis.edge_labels(i) == want) {
                    ordered.states.push_back(basis.states[i]);
                    found = true;
                }
            }
            if (!found) {
                throw std::logic_error("golden basis state missing for " + cat.name());
            }
        }
        basis = std::move(ordered);
        return;
    }
}

}  // namespace

FusionTreeBasis enumerate_lexicographic(const Category &cat, const TreeShape &shape, LabelId total) {
    FusionTreeBasis basis;
    basis.shape = shape;
    basis.total = total;
    for (auto &l : enumerate_subtree(cat, shape, shape.root())) {
        if (l[static_cast<size_t>(shape.root())] == total) {
            basis.states.push_back(std::move(l));
        }
    }
    auto edges = shape.internal_edges();
    auto key = [&](const Labeling &l) {
        std::vector<LabelId> k;
        for (int id : edges) {
            k.push_back(l[static_cast<size_t>(id)]);
        }
        return k;
    };
    std::sort(basis.states.begin(), basis.states.end(),
              [&](const Labeling &a, const Labeling &b) { return key(a) < key(b); });
    basis.signs.assign(basis.states.size(), 1);
    return basis;
}

FusionTreeBasis enumerate_basis(const Category &cat, const TreeShape &shape, LabelId total) {
    FusionTreeBasis basis = enumerate_lexicographic(cat, shape, total);
    apply_golden_order(cat, basis);
    return basis;
}

long long path_count(const Category &cat, const std::vector<LabelId> &leaves, LabelId total) {
    if (leaves.empty()) {
        return 0;
    }
    std::vector<long long> counts(static_cast<size_t>(cat.num_labels()), 0);
    counts[static_cast<size_t>(leaves[0])] = 1;
    for (size_t i = 1; i < leaves.size(); i++) {
        std::vector<long long> next(counts.size(), 0);
        for (LabelId x = 0; x < cat.num_labels(); x++) {
            for (LabelId c : cat.fuse(x, leaves[i])) {
                next[static_cast<size_t>(c)] += counts[static_cast<size_t>(x)];
            }
        }
        counts = std::move(next);
    }
    return counts[static_cast<size_t>(total)];
}

namespace {

// Label carried by the edge above node id.
LabelId top(const Labeling &l, int id) {
    return l[static_cast<size_t>(id)];
}

}  // namespace

BasisMove rotate_right(const Category &cat, const FusionTreeBasis &from, int v) {
    const auto &shape = from.shape;
    const auto &top_node = shape.node(v);
    int l = top_node.left;
    int A = shape.node(l).left;
    int B = shape.node(l).right;
    int C = top_node.right;
    BasisMove out;
    out.basis = enumerate_lexicographic(cat, shape.rotated_right(v), from.total);
    out.map = Matrix::Zero(static_cast<Eigen::Index>(out.basis.dim()), static_cast<Eigen::Index>(from.dim()));
    for (size_t i = 0; i < from.dim(); i++) {
        const Labeling &s = from.states[i];
        LabelId a = top(s, A), b = top(s, B), c = top(s, C), d = top(s, v), n = top(s, l);
        Matrix F = cat.f_matrix_required(a, b, c, d);
        auto rows = cat.f_rows(a, b, c, d);
        auto cols = cat.f_cols(a, b, c, d);
        auto r = std::find(rows.begin(), rows.end(), n) - rows.begin();
        for (size_t k = 0; k < cols.size(); k++) {
            Labeling t = s;
            t[static_cast<size_t>(l)] = cols[k];
            auto j = out.basis.find(t);
            if (!j) {
                throw std::logic_error("rotate_right: target state not enumerated");
            }
            out.map(static_cast<Eigen::Index>(*j), static_cast<Eigen::Index>(i)) += F(r, static_cast<Eigen::Index>(k));
        }
    }
    return out;
}

BasisMove rotate_left(const Category &cat, const FusionTreeBasis &from, int v) {
    const auto &shape = from.shape;
    const auto &top_node = shape.node(v);
    int r = top_node.right;
    int A = top_node.left;
    int B = shape.node(r).left;
    int C = shape.node(r).right;
    BasisMove out;
    out.basis = enumerate_lexicographic(cat, shape.rotated_left(v), from.total);
    out.map = Matrix::Zero(static_cast<Eigen::Index>(out.basis.dim()), static_cast<Eigen::Index>(from.dim()));
    for (size_t i = 0; i < from.dim(); i++) {
        const Labeling &s = from.states[i];
        LabelId a = top(s, A), b = top(s, B), c = top(s, C), d = top(s, v), m = top(s, r);
        // |(a(bc)_m)_d> = sum_n (F^{-1})_{mn} |((ab)_n c)_d>
        Matrix Finv = cat.f_matrix_required(a, b, c, d).inverse();
        auto rows = cat.f_rows(a, b, c, d);
        auto cols = cat.f_cols(a, b, c, d);
        auto mi = std::find(cols.begin(), cols.end(), m) - cols.begin();
        for (size_t k = 0; k < rows.size(); k++) {
            Labeling t = s;
            t[static_cast<size_t>(r)] = rows[k];
            auto j = out.basis.find(t);
            if (!j) {
                throw std::logic_error("rotate_left: target state not enumerated");
            }
            out.map(static_cast<Eigen::Index>(*j), static_cast<Eigen::Index>(i)) +=
                Finv(mi, static_cast<Eigen::Index>(k));
        }
    }
    return out;
}

BasisMove to_canonical(const Category &cat, const FusionTreeBasis &from, MoveSchedule schedule) {
    BasisMove acc;
    acc.basis = from;
    acc.basis.signs.assign(from.dim(), 1);
    acc.map = Matrix::Identity(static_cast<Eigen::Index>(from.dim()), static_cast<Eigen::Index>(from.dim()));
    while (true) {
        const TreeShape &shape = acc.basis.shape;
        int target = -1;
        for (int id : shape.preorder()) {
            const auto &n = shape.node(id);
            if (n.is_leaf()) {
                continue;
            }
            int child = schedule == MoveSchedule::kLeftNested ? n.right : n.left;
            if (!shape.node(child).is_leaf()) {
                target = id;
                break;
            }
        }
        if (target < 0) {
            break;
        }
        BasisMove step = schedule == MoveSchedule::kLeftNested ? rotate_left(cat, acc.basis, target)
                                                               : rotate_right(cat, acc.basis, target);
        acc.map = step.map * acc.map;
        acc.basis = std::move(step.basis);
    }
    return acc;
}

namespace {

// Permutation taking coordinates of `from` to coordinates of `to` when both
// live on structurally identical trees (node ids may differ).
Matrix structural_permutation(const FusionTreeBasis &from, const FusionTreeBasis &to) {
    auto key = [](const FusionTreeBasis &b, size_t i) {
        std::vector<LabelId> k;
        for (int id : b.shape.preorder()) {
            k.push_back(b.states[i][static_cast<size_t>(id)]);
        }
        return k;
    };
    Matrix p = Matrix::Zero(static_cast<Eigen::Index>(to.dim()), static_cast<Eigen::Index>(from.dim()));
    for (size_t i = 0; i < from.dim(); i++) {
        auto ki = key(from, i);
        bool found = false;
        for (size_t j = 0; j < to.dim(); j++) {
            if (key(to, j) == ki) {
                p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1;
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::logic_error("structural_permutation: unmatched state");
        }
    }
    return p;
}

}  // namespace

Isometry tree_change(const Category &cat,
                     const FusionTreeBasis &from,
                     const FusionTreeBasis &to,
                     MoveSchedule schedule) {
    if (from.shape.leaf_labels() != to.shape.leaf_labels() || from.total != to.total) {
        throw std::invalid_argument("tree_change: bases have different leaves or total charge");
    }
    if (from.shape.same_structure(to.shape)) {
        return to.sign_matrix() * structural_permutation(from, to) * from.sign_matrix();
    }
    BasisMove a = to_canonical(cat, from, schedule);
    BasisMove b = to_canonical(cat, to, schedule);
    Matrix align = structural_permutation(a.basis, b.basis);
    Matrix unsigned_map = b.map.inverse() * align * a.map;
    return to.sign_matrix() * unsigned_map * from.sign_matrix();
}

BlockEmbedding block_embedding(const Category &cat,
                               const TreeShape &block_shape,
                               LabelId block_total,
                               int n_blocks,
                               LabelId total) {
    BlockEmbedding out;
    out.block = enumerate_basis(cat, block_shape, block_total);
    if (out.block.dim() == 0) {
        throw std::invalid_argument("block_embedding: block space is empty");
    }
    if (n_blocks == 1) {
        if (total != block_total) {
            throw std::invalid_argument("block_embedding: a single block must carry the total charge");
        }
        out.full = out.block;
        out.map = Matrix::Identity(static_cast<Eigen::Index>(out.block.dim()), static_cast<Eigen::Index>(out.block.dim()));
        return out;
    }
    if (n_blocks != 2) {
        throw std::invalid_argument("block_embedding: only 1 or 2 blocks are supported");
    }
    if (!cat.fusion().admissible(block_total, block_total, total)) {
        throw std::invalid_argument("block_embedding: block charges cannot fuse to the total");
    }
    TreeShape joined = TreeShape::join(block_shape, block_shape);
    out.full = enumerate_basis(cat, joined, total);
    size_t d = out.block.dim();
    int offset = block_shape.num_nodes();
    out.map = Matrix::Zero(static_cast<Eigen::Index>(out.full.dim()), static_cast<Eigen::Index>(d * d));
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            Labeling l(static_cast<size_t>(joined.num_nodes()), -1);
            for (int k = 0; k < offset; k++) {
                l[static_cast<size_t>(k)] = out.block.states[i][static_cast<size_t>(k)];
                l[static_cast<size_t>(k + offset)] = out.block.states[j][static_cast<size_t>(k)];
            }
            l[static_cast<size_t>(joined.root())] = total;
            auto row = out.full.find(l);
            if (!row) {
                throw std::logic_error("block_embedding: product state not in full basis");
            }
            out.map(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(i * d + j)) =
                static_cast<double>(out.block.signs[i] * out.block.signs[j] * out.full.signs[*row]);
        }
    }
    return out;
}

}  // namespace metaplectic
