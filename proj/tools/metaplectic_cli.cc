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

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metaplectic/braid_rep.h"
#include "metaplectic/braid_synthesis.h"
#include "metaplectic/category.h"
#include "metaplectic/category_io.h"
#include "metaplectic/density_witness.h"
#include "metaplectic/fusion_space.h"
#include "metaplectic/protocol_sim.h"
#include "metaplectic/qudit_gates.h"
#include "metaplectic/report.h"

using namespace metaplectic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitMissingData = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 66;

constexpr const char *kSentinel = "--- machine-readable ---";

/// Human text, then the sentinel, then key=value lines or CSV.
struct Output {
    std::ostringstream human;
    KeyValues machine;
    std::vector<std::string> csv;
    bool failed = false;

    void check(const std::string &key, bool ok, const std::string &detail) {
        human << (ok ? "ok    " : "FAIL  ") << key << "  " << detail << "\n";
        machine.add(key + ".pass", ok);
        failed = failed || !ok;
    }

    int flush() const {
        std::cout << human.str() << kSentinel << "\n";
        machine.write(std::cout);
        for (const auto &line : csv) {
            std::cout << line << "\n";
        }
        return failed ? kExitCheckFailed : kExitOk;
    }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

Category resolve_category(const std::string &name_or_path) {
    for (const auto &n : builtin_category_names()) {
        if (n == name_or_path) {
            return builtin_category(n);
        }
    }
    if (name_or_path == "so3_2") {
        return builtin_category(name_or_path);
    }
    return load_category_file(name_or_path);
}

std::string default_tree(const Category &cat) {
    return cat.name() == "so5_2" ? "((eps eps)(eps eps))->y1" : "((eps eps)(eps eps))->y";
}

BraidRep build_rep(const Category &cat, const std::string &tree, const std::string &engine) {
    auto [shape, total] = parse_tree_shape(cat, tree);
    if (engine == "closed") {
        if (!shape.same_structure(TreeShape::pair_tree(shape.leaf_labels()[0]))) {
            throw std::invalid_argument("the closed formula needs a ((a a)(a a)) tree");
        }
        return pair_tree_generators(cat, shape.leaf_labels()[0], total);
    }
    return general_generators(cat, enumerate_basis(cat, shape, total));
}

void print_basis(Output &out, const Category &cat, const FusionTreeBasis &basis) {
    out.human << "basis (" << basis.dim() << " states) of " << basis.shape.to_string(cat) << "->"
              << cat.label_name(basis.total) << ":\n";
    for (size_t i = 0; i < basis.dim(); i++) {
        out.human << "  |" << i << "> = " << basis.state_name(cat, i) << "\n";
    }
    out.machine.add("dim", basis.dim());
}

void print_matrix(Output &out, const std::string &key, const Matrix &m) {
    out.human << key << " =\n" << format_matrix(m) << "\n";
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            out.machine.add(key + "[" + std::to_string(i) + "," + std::to_string(j) + "]", m(i, j));
        }
    }
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); i++) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

// category ------------------------------------------------------------------

int cmd_category_show(const std::string &target) {
    Category cat = resolve_category(target);
    Output out;
    out.human << "category " << cat.name() << "\nlabels:\n";
    for (LabelId a = 0; a < cat.num_labels(); a++) {
        const auto &l = cat.label(a);
        out.human << "  " << l.name << "  qdim " << l.qdim;
        if (!l.aliases.empty()) {
            out.human << "  aliases " << join(l.aliases, ",");
        }
        out.human << "\n";
        out.machine.add("label." + l.name + ".qdim", l.qdim);
    }
    out.human << "fusion:\n";
    for (LabelId a = 0; a < cat.num_labels(); a++) {
        for (LabelId b = a; b < cat.num_labels(); b++) {
            std::vector<std::string> ch;
            for (LabelId c : cat.fuse(a, b)) {
                ch.push_back(cat.label_name(c));
            }
            out.human << "  " << cat.label_name(a) << " x " << cat.label_name(b) << " = " << join(ch, " + ") << "\n";
        }
    }
    out.human << "stored F blocks " << cat.stored_f().size() << ", stored R symbols " << cat.stored_r().size()
              << "\n";
    out.machine.add("category", cat.name());
    out.machine.add("labels", cat.num_labels());
    out.machine.add("stored_f", cat.stored_f().size());
    out.machine.add("stored_r", cat.stored_r().size());
    for (const auto &[k, v] : cat.constants()) {
        out.human << "constant " << k << " = " << v << "\n";
        out.machine.add("constant." + k, v);
    }
    return out.flush();
}

int cmd_category_check(const std::string &target, double tol) {
    Category cat = resolve_category(target);
    ConsistencyReport r = check_consistency(cat);
    Output out;
    out.human << "category " << cat.name() << "\n";
    out.check("fusion", r.fusion_commutative && r.fusion_unit && r.fusion_associativity_failures == 0 &&
                            r.fusion_dimension_max < tol,
              "dimension residual " + sci(r.fusion_dimension_max));
    out.check("pentagon", r.pentagon_max < tol,
              "max " + sci(r.pentagon_max) + " over " + std::to_string(r.pentagon_evaluated) + " instances, " +
                  std::to_string(r.pentagon_skipped) + " skipped");
    out.check("hexagon", r.hexagon_max < tol,
              "max " + sci(r.hexagon_max) + " (" + r.hexagon_orientation + ") over " +
                  std::to_string(r.hexagon_evaluated) + " instances, " + std::to_string(r.hexagon_skipped) +
                  " skipped");
    out.check("f_unitarity", r.unitarity_max < tol, "max " + sci(r.unitarity_max));
    out.check("r_modulus", r.r_modulus_max < 1e-12, "max " + sci(r.r_modulus_max));
    out.human << "missing data: " << r.f_missing << " F blocks, " << r.r_missing << " R symbols\n";
    out.machine.add("category", cat.name());
    out.machine.add("pentagon_max", r.pentagon_max);
    out.machine.add("pentagon_evaluated", r.pentagon_evaluated);
    out.machine.add("pentagon_skipped", r.pentagon_skipped);
    out.machine.add("hexagon_max_r", r.hexagon_max_r);
    out.machine.add("hexagon_max_rinv", r.hexagon_max_rinv);
    out.machine.add("hexagon_orientation", r.hexagon_orientation);
    out.machine.add("hexagon_evaluated", r.hexagon_evaluated);
    out.machine.add("hexagon_skipped", r.hexagon_skipped);
    out.machine.add("unitarity_max", r.unitarity_max);
    out.machine.add("r_modulus_max", r.r_modulus_max);
    out.machine.add("f_missing", r.f_missing);
    out.machine.add("r_missing", r.r_missing);
    return out.flush();
}

int cmd_category_dump(const std::string &target, const std::string &path) {
    Category cat = resolve_category(target);
    if (path.empty() || path == "-") {
        std::cout << serialize_category(cat);
    } else {
        save_category_file(cat, path);
        std::cerr << "wrote " << path << "\n";
    }
    return kExitOk;
}

int cmd_category_load(const std::string &path) {
    Category cat = load_category_file(path);
    Output out;
    out.human << "loaded category " << cat.name() << " from " << path << ": " << cat.num_labels() << " labels, "
              << cat.stored_f().size() << " F blocks, " << cat.stored_r().size() << " R symbols\n";
    out.machine.add("category", cat.name());
    out.machine.add("labels", cat.num_labels());
    out.machine.add("stored_f", cat.stored_f().size());
    out.machine.add("stored_r", cat.stored_r().size());
    return out.flush();
}

// rep / braid -----------------------------------------------------------------

int cmd_rep(const std::string &category, std::string tree, const std::string &engine, double tol) {
    Category cat = resolve_category(category);
    if (tree.empty()) {
        tree = default_tree(cat);
    }
    BraidRep rep = build_rep(cat, tree, engine);
    Output out;
    out.machine.add("category", cat.name());
    out.machine.add("engine", engine);
    print_basis(out, cat, rep.basis);
    for (int i = 1; i < rep.n_strands(); i++) {
        print_matrix(out, "sigma" + std::to_string(i), rep.sigma(i));
    }
    RepCheckReport r = rep_check(rep);
    out.check("unitarity", r.unitarity_max < tol, sci(r.unitarity_max));
    out.check("braid_relation", r.braid_max < tol, sci(r.braid_max));
    out.check("far_commutation", r.far_commute_max < tol, sci(r.far_commute_max));
    return out.flush();
}

int cmd_braid(const std::string &category,
              std::string tree,
              const std::string &word,
              const std::string &target,
              double tol) {
    Category cat = resolve_category(category);
    if (tree.empty()) {
        tree = default_tree(cat);
    }
    BraidRep rep = build_rep(cat, tree, "moves");
    BraidWord w = parse_braid_word(word, rep.n_strands());
    Matrix u = eval_word(rep, w);
    Output out;
    out.machine.add("category", cat.name());
    out.machine.add("word", w.to_string());
    print_basis(out, cat, rep.basis);
    out.human << "word: " << w.to_string() << "\n";
    print_matrix(out, "U", u);
    if (!target.empty()) {
        IdentityCheck c = verify_matrix(u, make_gate(target), std::nullopt, tol);
        out.machine.add("phase", c.phase);
        out.machine.add("residual", c.residual);
        out.check("target " + target, c.pass, "residual " + sci(c.residual) + " phase " + format_complex(c.phase, 6));
    }
    return out.flush();
}

// verify ------------------------------------------------------------------------

void record(Output &out, const std::string &key, const IdentityCheck &c) {
    out.machine.add(key + ".residual", c.residual);
    out.machine.add(key + ".leakage", c.leakage);
    out.check(key, c.pass, "residual " + sci(c.residual) + " leakage " + sci(c.leakage));
}

Matrix permutation_matrix(const std::vector<int> &image) {
    auto n = static_cast<Eigen::Index>(image.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        m(image[static_cast<size_t>(j)], j) = 1;
    }
    return m;
}

int verify_su2_4(Output &out, double tol) {
    Category cat = builtin_category("su2_4");
    LabelId eps = cat.label_id("eps");
    LabelId y = cat.label_id("y");
    BraidRep rep = pair_tree_generators(cat, eps, y);
    Matrix h_word = eval_word(rep, parse_braid_word("Hword", 4));
    record(out, "H", verify_matrix(h_word, hadamard(3), std::nullopt, tol));
    // The braid image: p^2 exchanges |0>,|2> and q^2 exchanges |0>,|1>, both with sign -1.
    record(out, "p2", verify_identity(rep, parse_braid_word("p p", 4), -permutation_matrix({2, 1, 0}), std::nullopt, tol));
    record(out, "q2", verify_identity(rep, parse_braid_word("q q", 4), -permutation_matrix({1, 0, 2}), std::nullopt, tol));
    record(out, "Q1", verify_identity(rep, parse_braid_word("1", 4), q_gate(3, 1), std::nullopt, tol));
    record(out, "Q2", verify_identity(rep, parse_braid_word("3", 4), q_gate(3, 2), std::nullopt, tol));
    Matrix q0 = eval_word(rep, parse_braid_word("1 3", 4)).adjoint();
    record(out, "Q0", verify_matrix(q0, q_gate(3, 0), std::nullopt, tol));

    auto two = TreeShape::join(TreeShape::pair_tree(eps), TreeShape::pair_tree(eps));
    BraidRep rep8 = general_generators(cat, enumerate_basis(cat, two, y));
    BlockEmbedding emb = block_embedding(cat, TreeShape::pair_tree(eps), y, 2, y);
    Matrix cz = eval_word(rep8, parse_braid_word("CZword", 8));
    IdentityCheck czc = verify_matrix(cz, cz_gate(3), emb.map, tol);
    record(out, "CZ", czc);
    Matrix cz9 = emb.map.adjoint() * cz * emb.map;
    Matrix id3 = Matrix::Identity(3, 3);
    Matrix sum = kron(id3, h_word) * cz9.adjoint() * kron(id3, h_word.adjoint());
    record(out, "SUM", verify_matrix(sum, sum_gate(3), std::nullopt, tol));
    return 0;
}

int verify_so5_2(Output &out, double tol) {
    Category cat = builtin_category("so5_2");
    BraidRep rep = pair_tree_generators(cat, cat.label_id("eps"), cat.label_id("y1"));
    struct Case {
        const char *key;
        const char *word;
        Matrix target;
    };
    std::vector<Case> cases = {
        {"H5", "-1 -3 2 2 -1 -3", hadamard(5)},
        {"Z5", "1 -3", z_gate(5)},
        {"X5", "1 2 -1 -1 3 3 -2 -1", x_gate(5)},
        {"M2", "1 1 -2 -2 -1 -3 2 1", mult_gate(5, 2)},
        {"M3", "1 1 -2 1 3 2 2 3", mult_gate(5, 3)},
        {"M4", "1 2 1 3 2 1", mult_gate(5, 4)},
    };
    std::vector<Unitary> classical;
    for (const auto &c : cases) {
        BraidWord w = parse_braid_word(c.word, 4);
        record(out, c.key, verify_identity(rep, w, c.target, std::nullopt, tol));
        if (c.key[0] == 'X' || c.key[0] == 'M') {
            classical.push_back(eval_word(rep, w));
        }
    }
    ClosureResult g = group_closure(classical, true);
    out.machine.add("classical.order", g.order);
    out.check("classical_order", !g.cap_exceeded && g.order == 20, std::to_string(g.order));
    return 0;
}

int cmd_verify_suite(const std::string &category, double tol) {
    Output out;
    out.machine.add("category", category);
    if (category == "su2_4" || category == "so3_2") {
        verify_su2_4(out, tol);
    } else if (category == "so5_2") {
        verify_so5_2(out, tol);
    } else {
        throw CLI::ValidationError("--category", "suite available for su2_4 and so5_2");
    }
    return out.flush();
}

int cmd_verify_word(const std::string &category,
                    std::string tree,
                    const std::string &word,
                    const std::string &target,
                    int blocks,
                    const std::string &block_charge,
                    double tol) {
    Category cat = resolve_category(category);
    if (tree.empty()) {
        tree = default_tree(cat);
    }
    auto [shape, total] = parse_tree_shape(cat, tree);
    Output out;
    std::optional<Isometry> sub;
    BraidRep rep;
    if (blocks == 2) {
        LabelId charge = block_charge.empty() ? total : cat.label_id(block_charge);
        BlockEmbedding emb = block_embedding(cat, shape, charge, 2, total);
        rep = general_generators(cat, emb.full);
        sub = emb.map;
    } else {
        rep = general_generators(cat, enumerate_basis(cat, shape, total));
    }
    BraidWord w = parse_braid_word(word, rep.n_strands());
    IdentityCheck c = verify_identity(rep, w, make_gate(target), sub, tol);
    out.machine.add("category", cat.name());
    out.machine.add("word", w.to_string());
    out.machine.add("phase", c.phase);
    record(out, target, c);
    return out.flush();
}

// group ------------------------------------------------------------------------

std::vector<Unitary> model_generators(const std::string &model) {
    if (model == "su2_4-qutrit") {
        Category cat = builtin_category("su2_4");
        return pair_tree_generators(cat, cat.label_id("eps"), cat.label_id("y")).generators;
    }
    if (model == "su2_4-qubit") {
        Category cat = builtin_category("su2_4");
        return pair_tree_generators(cat, cat.label_id("eps"), cat.label_id("one")).generators;
    }
    if (model == "so5_2-qupit") {
        Category cat = builtin_category("so5_2");
        return pair_tree_generators(cat, cat.label_id("eps"), cat.label_id("y1")).generators;
    }
    if (model == "so5_2-classical") {
        Category cat = builtin_category("so5_2");
        BraidRep rep = pair_tree_generators(cat, cat.label_id("eps"), cat.label_id("y1"));
        std::vector<Unitary> out;
        for (const char *w : {"1 2 -1 -1 3 3 -2 -1", "1 1 -2 -2 -1 -3 2 1", "1 1 -2 1 3 2 2 3", "1 2 1 3 2 1"}) {
            out.push_back(eval_word(rep, parse_braid_word(w, 4)));
        }
        return out;
    }
    throw CLI::ValidationError("--model",
                               "unknown model '" + model +
                                   "' (su2_4-qutrit, su2_4-qubit, so5_2-qupit, so5_2-classical)");
}

int cmd_group_order(const std::string &model,
                    const std::vector<std::string> &gates,
                    bool projective,
                    long long cap,
                    long long expect) {
    std::vector<Unitary> gens;
    std::string source = model;
    if (!gates.empty()) {
        for (const auto &g : gates) {
            gens.push_back(make_gate(g));
        }
        source = join(gates, ",");
    } else {
        gens = model_generators(model);
    }
    ClosureResult r = group_closure(gens, projective, cap);
    Output out;
    out.human << "generators: " << source << " (" << (projective ? "projective" : "det-normalized") << ")\n";
    if (r.cap_exceeded) {
        out.human << "closure exceeded the cap of " << cap << " elements\n";
    } else {
        out.human << "order " << r.order << ", center " << r.center_size << "\n";
        out.human << "element orders:";
        for (const auto &[k, n] : r.order_histogram) {
            out.human << " " << k << ":" << n;
        }
        out.human << "\n";
    }
    out.machine.add("source", source);
    out.machine.add("projective", projective);
    out.machine.add("cap_exceeded", r.cap_exceeded);
    out.machine.add("order", r.order);
    out.machine.add("center", r.center_size);
    for (const auto &[k, n] : r.order_histogram) {
        out.machine.add("element_order." + std::to_string(k), n);
    }
    if (expect > 0) {
        out.check("order", !r.cap_exceeded && r.order == expect, "expected " + std::to_string(expect));
    } else if (expect == -1) {
        out.check("cap_exceeded", r.cap_exceeded, "expected the cap to be exceeded");
    }
    return out.flush();
}

// witness ----------------------------------------------------------------------

int cmd_witness(const std::string &kind, int p, const std::string &gate) {
    Output out;
    if (kind == "qutrit") {
        for (int i = 0; i < 3; i++) {
            QutritWitness w = qutrit_commutator_witness(i);
            out.machine.append(w.report());
            out.check("qutrit[" + std::to_string(i) + "]", w.pass(),
                      "eigenvalue residual " + sci(w.eigenvalue_residual) + ", commutator " + sci(w.commutator_norm));
        }
    } else if (kind == "qupit") {
        QupitSubspaceReport r = qupit_subspace_chain(p);
        out.machine.append(r.report());
        out.check("qupit[" + std::to_string(p) + "]", r.pass(), "span rank " + std::to_string(r.span_rank));
    } else if (kind == "so5") {
        So5PartialReport r = so5_partial_results();
        out.machine.append(r.report());
        out.check("so5_partial", r.pass(), "commutant dimension " + std::to_string(r.commutant_dimension));
    } else if (kind == "imprimitivity") {
        GateSpec spec = parse_gate_name(gate);
        Unitary u = make_gate(spec);
        ImprimitivityWitness w = imprimitivity_witness(u, spec.d);
        out.machine.add("gate", gate);
        out.machine.add("schmidt_rank", w.schmidt_rank);
        out.human << gate << " maps the product state to Schmidt rank " << w.schmidt_rank << "\n";
        out.check("imprimitive", w.schmidt_rank > 1, "rank " + std::to_string(w.schmidt_rank));
    } else {
        throw CLI::ValidationError("kind", "expected qutrit, qupit, so5 or imprimitivity");
    }
    return out.flush();
}

// protocol -----------------------------------------------------------------------

int cmd_protocol_flip(long long trials, int rounds, std::uint64_t seed, double sigmas) {
    auto curve = estimate_flip_success(trials, rounds, seed);
    Output out;
    out.human << "Flip[2] protocol: " << trials << " trials, seed " << seed << "\n";
    out.csv.push_back("n,p_hat,p_exact,stderr");
    bool ok = true;
    for (const auto &pt : curve) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f", pt.n, pt.p_hat, pt.p_exact, pt.stderr_hat);
        out.csv.emplace_back(buf);
        double z = pt.sigma_exact > 0 ? (pt.p_hat - pt.p_exact) / pt.sigma_exact : 0;
        out.human << "  n=" << pt.n << "  p_hat " << pt.p_hat << "  exact " << pt.p_exact << "  z " << z << "\n";
        ok = ok && std::abs(z) <= sigmas;
        Rational exact = flip_absorption_exact(pt.n);
        ok = ok && exact == flip_closed_form(pt.n);
    }
    out.human << (ok ? "all points within " : "some point outside ") << sigmas << " sigma\n";
    out.failed = !ok;
    return out.flush();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Metaplectic anyon simulation and verification"};
    app.require_subcommand(1);
    double tol = 1e-9;
    app.add_option("--tol", tol, "Residual tolerance")->capture_default_str();

    std::function<int()> action;

    auto *category = app.add_subcommand("category", "Inspect, check and serialize category data");
    category->require_subcommand(1);
    std::string cat_target;
    std::string dump_path;
    auto *show = category->add_subcommand("show", "Labels, fusion rules and table sizes");
    show->add_option("category", cat_target, "Builtin name or file")->required();
    show->callback([&] { action = [&] { return cmd_category_show(cat_target); }; });
    auto *check = category->add_subcommand("check", "Pentagon, hexagon, unitarity and modulus residuals");
    check->add_option("category", cat_target, "Builtin name or file")->required();
    check->callback([&] { action = [&] { return cmd_category_check(cat_target, tol); }; });
    auto *dump = category->add_subcommand("dump", "Write the text serialization");
    dump->add_option("category", cat_target, "Builtin name or file")->required();
    dump->add_option("-o,--output", dump_path, "Output path (default stdout)");
    dump->callback([&] { action = [&] { return cmd_category_dump(cat_target, dump_path); }; });
    auto *load = category->add_subcommand("load", "Parse and validate a category file");
    load->add_option("path", cat_target, "Category file")->required();
    load->callback([&] { action = [&] { return cmd_category_load(cat_target); }; });

    std::string cat_name = "su2_4";
    std::string tree;
    std::string engine = "moves";
    auto *rep = app.add_subcommand("rep", "Braid generators on a fusion basis");
    rep->add_option("--category", cat_name)->capture_default_str();
    rep->add_option("--tree", tree, "Tree shape, e.g. ((eps eps)(eps eps))->y");
    rep->add_option("--engine", engine)->check(CLI::IsMember({"moves", "closed"}))->capture_default_str();
    rep->callback([&] { action = [&] { return cmd_rep(cat_name, tree, engine, tol); }; });

    std::string word;
    std::string target;
    auto *braid = app.add_subcommand("braid", "Evaluate a braid word");
    braid->add_option("--category", cat_name)->capture_default_str();
    braid->add_option("--tree", tree);
    braid->add_option("--word", word, "Signed letters or named words")->required();
    braid->add_option("--target", target, "Gate name to compare up to phase");
    braid->callback([&] { action = [&] { return cmd_braid(cat_name, tree, word, target, 1e-8); }; });

    double verify_tol = 1e-8;
    int blocks = 1;
    std::string block_charge;
    auto *verify = app.add_subcommand("verify", "Gate identity checks");
    verify->require_subcommand(1);
    verify->add_option("--tol", verify_tol)->capture_default_str();
    auto *suite = verify->add_subcommand("suite", "Identity battery for a computational model");
    suite->add_option("--category", cat_name)->capture_default_str();
    suite->callback([&] { action = [&] { return cmd_verify_suite(cat_name, verify_tol); }; });
    auto *vword = verify->add_subcommand("word", "Compare one word with a gate");
    vword->add_option("--category", cat_name)->capture_default_str();
    vword->add_option("--tree", tree, "Per-block tree when --blocks 2");
    vword->add_option("--word", word)->required();
    vword->add_option("--target", target)->required();
    vword->add_option("--blocks", blocks)->check(CLI::Range(1, 2))->capture_default_str();
    vword->add_option("--block-charge", block_charge);
    vword->callback([&] {
        action = [&] { return cmd_verify_word(cat_name, tree, word, target, blocks, block_charge, verify_tol); };
    });

    std::string model = "su2_4-qutrit";
    std::vector<std::string> gates;
    bool projective = false;
    long long cap = 100000;
    long long expect = 0;
    auto *group = app.add_subcommand("group", "Finite group closure");
    group->require_subcommand(1);
    auto *order = group->add_subcommand("order", "Order, center and element-order histogram");
    order->add_option("--model", model)->capture_default_str();
    order->add_option("--gates", gates, "Gate names instead of a model")->delimiter(',');
    order->add_flag("--projective", projective, "Work modulo global phase");
    order->add_option("--cap", cap)->capture_default_str();
    order->add_option("--expect", expect, "Expected order; -1 expects the cap to be exceeded");
    order->callback([&] { action = [&] { return cmd_group_order(model, gates, projective, cap, expect); }; });

    std::string kind;
    int p = 5;
    std::string gate = "SUM3";
    auto *witness = app.add_subcommand("witness", "Universality witnesses");
    witness->add_option("kind", kind, "qutrit | qupit | so5 | imprimitivity")->required();
    witness->add_option("--p", p)->capture_default_str();
    witness->add_option("--gate", gate)->capture_default_str();
    witness->callback([&] { action = [&] { return cmd_witness(kind, p, gate); }; });

    long long trials = 100000;
    int rounds = 10;
    std::uint64_t seed = 1;
    double sigmas = 3;
    auto *protocol = app.add_subcommand("protocol", "Measurement-assisted protocols");
    protocol->require_subcommand(1);
    auto *flip = protocol->add_subcommand("flip", "Monte Carlo of the Flip[2] construction");
    flip->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
    flip->add_option("--rounds", rounds)->check(CLI::Range(1, 39))->capture_default_str();
    flip->add_option("--seed", seed)->capture_default_str();
    flip->add_option("--sigmas", sigmas, "Acceptance band in binomial sigmas")->capture_default_str();
    flip->callback([&] { action = [&] { return cmd_protocol_flip(trials, rounds, seed, sigmas); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        return action();
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MissingDataError &e) {
        std::cerr << "missing data: " << e.what() << "\n";
        return kExitMissingData;
    } catch (const std::ios_base::failure &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CategoryParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
