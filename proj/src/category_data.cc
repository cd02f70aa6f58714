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

// Builtin F- and R-tables for SU(2)_4 = SO(3)_2 and SO(5)_2.

#include <cmath>
#include <sstream>

#include "metaplectic/category.h"

namespace metaplectic {

namespace {

using Rows = std::initializer_list<std::initializer_list<double>>;

Matrix real_matrix(Rows rows, double scale = 1.0) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto &row : rows) {
        Eigen::Index c = 0;
        for (double v : row) {
            m(r, c++) = scale * v;
        }
        r++;
    }
    return m;
}

// Parses "a b c d; a b c d; ..." into F keys.
std::vector<FKey> tuples(const Category &labels_only, std::string_view spec) {
    std::vector<FKey> out;
    std::string s(spec);
    std::stringstream groups(s);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::stringstream words(group);
        std::vector<LabelId> ids;
        std::string w;
        while (words >> w) {
            ids.push_back(labels_only.label_id(w));
        }
        if (ids.empty()) {
            continue;
        }
        if (ids.size() != 4) {
            throw std::logic_error("builtin F table: malformed tuple '" + group + "'");
        }
        out.push_back(FKey{ids[0], ids[1], ids[2], ids[3]});
    }
    return out;
}

// Label-and-fusion skeleton used to resolve names while the tables are built.
Category skeleton(const std::string &name, const std::vector<Label> &labels, const FusionRules &fusion) {
    return Category(name, labels, fusion, {}, {});
}

struct TableBuilder {
    const Category &skel;
    FSymbolTable f;
    RSymbolTable r;
    bool transpose_input = false;

    void put(const Matrix &given, std::string_view spec) {
        Matrix stored = transpose_input ? Matrix(given.transpose()) : given;
        for (const FKey &key : tuples(skel, spec)) {
            if (f.count(key)) {
                throw std::logic_error("builtin F table: duplicate " + skel.describe_f(key.a, key.b, key.c, key.d));
            }
            f[key] = stored;
        }
    }

    void put_r(Complex value, std::string_view spec) {
        std::stringstream groups{std::string(spec)};
        std::string group;
        while (std::getline(groups, group, ';')) {
            std::stringstream words(group);
            std::string a, b, c;
            if (!(words >> a >> b >> c)) {
                continue;
            }
            r[RKey{skel.label_id(a), skel.label_id(b), skel.label_id(c)}] = value;
        }
    }

    // Every admissible 1x1 block that was not listed is trivial.
    void fill_trivial_scalars() {
        int n = skel.num_labels();
        for (LabelId a = 0; a < n; a++)
        for (LabelId b = 0; b < n; b++)
        for (LabelId c = 0; c < n; c++)
        for (LabelId d = 0; d < n; d++) {
            if (skel.f_rows(a, b, c, d).size() == 1 && !f.count(FKey{a, b, c, d})) {
                f[FKey{a, b, c, d}] = Matrix::Identity(1, 1);
            }
        }
    }
};

// Maps the symbolic SO(p)_2 order {1, z, y_1..y_r, eps, eps'} onto a target order.
FusionRules permuted_fusion(const FusionRules &sym, const std::vector<int> &target_of_symbolic) {
    FusionRules out(sym.size());
    for (int a = 0; a < sym.size(); a++)
    for (int b = 0; b < sym.size(); b++)
    for (int c = 0; c < sym.size(); c++) {
        out.set(target_of_symbolic[a], target_of_symbolic[b], target_of_symbolic[c], sym.admissible(a, b, c));
    }
    return out;
}

Category make_su2_4() {
    const double s3 = std::sqrt(3.0);
    std::vector<Label> labels = {
        {"0", 1.0, {"one"}},
        {"1", s3, {"eps"}},
        {"2", 2.0, {"y"}},
        {"3", s3, {"eps'"}},
        {"4", 1.0, {"z"}},
    };
    // symbolic 1, z, y, eps, eps' -> 0, 4, 2, 1, 3
    FusionRules fusion = permuted_fusion(metaplectic_fusion_rules(1), {0, 4, 2, 1, 3});
    Category skel = skeleton("su2_4", labels, fusion);
    TableBuilder t{skel, {}, {}, false};

    const double r2 = 1 / std::sqrt(2.0);
    const double r3 = 1 / s3;
    const double r23 = std::sqrt(2.0 / 3.0);
    t.put(real_matrix({{-1}}),
          "1 1 4 4; 1 2 3 4; 1 2 4 3; 1 3 2 4; 1 3 3 3; 1 3 4 2; 1 4 1 4; 1 4 2 3; 1 4 3 2; 1 4 4 1; 2 1 3 4; 2 1 4 3;"
          "2 2 2 4; 2 2 4 2; 2 3 1 4; 2 3 4 1; 2 4 1 3; 2 4 2 2; 2 4 3 1; 3 1 2 4; 3 1 3 3; 3 1 4 2; 3 2 1 4; 3 2 4 1;"
          "3 3 1 3; 3 3 3 1; 3 3 4 4; 3 4 1 2; 3 4 2 1; 3 4 3 4; 3 4 4 3; 4 1 1 4; 4 1 2 3; 4 1 3 2; 4 1 4 1; 4 2 1 3;"
          "4 2 2 2; 4 2 3 1; 4 3 1 2; 4 3 2 1; 4 3 3 4; 4 3 4 3; 4 4 1 1; 4 4 3 3");
    t.put(real_matrix({{-r3, r23}, {r23, r3}}), "1 1 1 1; 1 3 1 3; 3 1 3 1; 3 3 3 3");
    t.put(real_matrix({{-r2, r2}, {r2, r2}}),
          "1 1 2 2; 1 2 2 1; 1 2 2 3; 1 3 2 2; 2 1 1 2; 2 1 3 2; 2 2 1 1; 2 2 1 3; 2 2 3 1; 2 3 1 2; 3 1 2 2; 3 2 2 1");
    t.put(real_matrix({{-r23, r3}, {r3, r23}}), "1 1 3 3; 1 3 3 1; 3 1 1 3; 3 3 1 1");
    t.put(real_matrix({{-0.5, s3 / 2}, {s3 / 2, 0.5}}), "1 2 1 2; 2 1 2 1");
    t.put(real_matrix({{-s3 / 2, 0.5}, {0.5, s3 / 2}}), "1 2 3 2; 2 1 2 3; 2 3 2 1; 3 2 1 2");
    t.put(real_matrix({{r2, -r2}, {-r2, -r2}}), "2 2 3 3; 2 3 3 2; 3 2 2 3; 3 3 2 2");
    t.put(real_matrix({{0.5, -s3 / 2}, {-s3 / 2, -0.5}}), "2 3 2 3; 3 2 3 2");
    t.put(real_matrix({{0.5, -r2, 0.5}, {-r2, 0, r2}, {0.5, r2, 0.5}}), "2 2 2 2");
    t.fill_trivial_scalars();

    t.put_r(1.0, "0 0 0; 0 1 1; 0 2 2; 0 3 3; 0 4 4; 1 0 1; 2 0 2; 3 0 3; 4 0 4; 4 4 0");
    t.put_r(expi_pi(3.0 / 4), "1 1 0");
    t.put_r(expi_pi(1.0 / 12), "1 1 2");
    t.put_r(expi_pi(2.0 / 3), "1 2 1; 2 1 1; 2 2 2; 2 3 3; 3 2 3");
    t.put_r(expi_pi(1.0 / 6), "1 2 3; 2 1 3");
    t.put_r(expi_pi(7.0 / 12), "1 3 2; 3 1 2");
    t.put_r(expi_pi(1.0 / 4), "1 3 4; 3 1 4");
    t.put_r(Complex(0, 1), "1 4 3; 4 1 3");
    t.put_r(expi_pi(-2.0 / 3), "2 2 0");
    t.put_r(expi_pi(1.0 / 3), "2 2 4");
    t.put_r(expi_pi(-5.0 / 6), "2 3 1; 3 2 1");
    t.put_r(-1.0, "2 4 2; 4 2 2");
    t.put_r(expi_pi(-1.0 / 4), "3 3 0");
    t.put_r(expi_pi(-11.0 / 12), "3 3 2");
    t.put_r(Complex(0, -1), "3 4 1; 4 3 1");

    return Category("su2_4", labels, fusion, std::move(t.f), std::move(t.r));
}

Category make_so5_2() {
    const double s2 = std::sqrt(2.0);
    const double s5 = std::sqrt(5.0);
    const double h = std::sqrt(10 - 2 * s5);
    const double k = std::sqrt(10 + 2 * s5);
    const double r2 = 1 / s2;
    const double c = s5 / 10;
    const double phi = (s5 + 1) / 2;
    const double phi_inv = (s5 - 1) / 2;

    std::vector<Label> labels = {
        {"1", 1.0, {"one"}},
        {"z", 1.0, {}},
        {"y1", 2.0, {}},
        {"y2", 2.0, {}},
        {"eps", s5, {}},
        {"eps'", s5, {}},
    };
    FusionRules fusion = metaplectic_fusion_rules(2);
    Category skel = skeleton("so5_2", labels, fusion);
    // These tables index rows by the (bc) channel; store the transpose.
    TableBuilder t{skel, {}, {}, true};

    t.put(real_matrix({{-1}}),
          "z y1 y1 y2; z y1 y2 y1; z y2 y1 y1; z y2 y1 y2; z eps z eps; z eps y1 eps'; z eps y2 eps'; z eps' z eps';"
          "z eps' y1 eps; z eps' y2 eps; y1 z y1 y2; y1 z y2 y1; y1 y1 z y2; y1 y1 y2 z; y1 y2 z y1; y1 y2 z y2;"
          "y1 y2 y1 z; y1 eps z eps'; y1 eps' z eps; y2 z y1 y1; y2 z y2 y1; y2 y1 z y1; y2 y1 y1 z; y2 y1 y2 z;"
          "y2 eps z eps'; y2 eps' z eps; eps z eps z; eps z eps' y1; eps z eps' y2; eps y1 eps' z; eps y2 eps' z;"
          "eps' z eps y1; eps' z eps y2; eps' z eps' z; eps' y1 eps z; eps' y2 eps z");
    t.put(real_matrix({{r2, -r2}, {r2, r2}}),
          "y1 y1 y2 y2; y1 y1 eps eps'; y1 y1 eps' eps; y1 eps eps y2; y2 y2 y1 y1; y2 eps eps y1; eps y1 y2 eps;"
          "eps y2 y1 eps; eps eps' y1 y1; eps' eps y1 y1");
    t.put(real_matrix({{r2, r2}, {r2, -r2}}),
          "y1 y1 eps eps; y1 y1 eps' eps'; y1 eps eps y1; y1 eps' eps' y1; y2 y2 eps eps; y2 y2 eps eps';"
          "y2 y2 eps' eps; y2 y2 eps' eps'; y2 eps eps y2; y2 eps eps' y2; y2 eps' eps y2; y2 eps' eps' y2;"
          "eps y1 y1 eps; eps y2 y2 eps; eps y2 y2 eps'; eps eps y1 y1; eps eps y2 y2; eps eps' y2 y2;"
          "eps' y1 y1 eps'; eps' y2 y2 eps; eps' y2 y2 eps'; eps' eps y2 y2; eps' eps' y1 y1; eps' eps' y2 y2");
    t.put(real_matrix({{0, 1}, {1, 0}}), "y1 y2 y1 y2; y2 y1 y2 y1");
    t.put(real_matrix({{r2, r2}, {-r2, r2}}),
          "y1 y2 y2 y1; y1 y2 eps eps; y1 eps eps' y1; y1 eps' eps y1; y2 y1 y1 y2; y2 y1 eps eps; eps y1 y1 eps';"
          "eps eps y1 y2; eps eps y2 y1; eps' y1 y1 eps");
    t.put(real_matrix({{-r2, r2}, {r2, r2}}),
          "y1 y2 eps eps'; y1 eps' eps y2; y2 y1 eps' eps; y2 eps eps' y1; eps y2 y1 eps'; eps eps' y1 y2;"
          "eps' y1 y2 eps; eps' eps y2 y1");
    t.put(real_matrix({{-r2, -r2}, {r2, -r2}}), "y1 y2 eps' eps; y2 y1 eps eps'; eps eps' y2 y1; eps' eps y1 y2");
    t.put(real_matrix({{r2, -r2}, {-r2, -r2}}),
          "y1 y2 eps' eps'; y1 eps' eps' y2; y2 y1 eps' eps'; y2 eps' eps' y1; eps' y1 y2 eps'; eps' y2 y1 eps';"
          "eps' eps' y1 y2; eps' eps' y2 y1");
    t.put(real_matrix({{-c * k * k, h}, {h, c * k * k}}, 0.25), "y1 eps y1 eps; eps y1 eps y1");
    t.put(real_matrix({{h, c * k * k}, {c * k * k, -h}}, 0.25),
          "y1 eps y1 eps'; y1 eps' y1 eps; eps y1 eps' y1; eps' y1 eps y1");
    t.put(real_matrix({{c * h * h, k}, {k, -c * h * h}}, 0.25),
          "y1 eps y2 eps; y2 eps y1 eps; eps y1 eps y2; eps y2 eps y1");
    t.put(real_matrix({{k, -c * h * h}, {-c * h * h, -(s5 / 20) * h * k * k}}, 0.25),
          "y1 eps y2 eps'; y1 eps' y2 eps; y2 eps y1 eps'; y2 eps' y1 eps; eps y1 eps' y2; eps y2 eps' y1;"
          "eps' y1 eps y2; eps' y2 eps y1");
    t.put(real_matrix({{-r2, r2}, {-r2, -r2}}), "y1 eps eps' y2; y2 eps' eps y1; eps y1 y2 eps'; eps' y2 y1 eps");
    t.put(real_matrix({{c * k * k, -h}, {-h, -c * k * k}}, 0.25), "y1 eps' y1 eps'; eps' y1 eps' y1");
    t.put(real_matrix({{h, k * k / 2}, {k * k / 2, -h}}, -s5 * h / 40),
          "y1 eps' y2 eps'; y2 eps' y1 eps'; eps' y1 eps' y2; eps' y2 eps' y1");
    t.put(real_matrix({{-c * k * k, -h}, {-h, c * k * k}}, 0.25), "y2 eps y2 eps; eps y2 eps y2");
    t.put(real_matrix({{-h, c * k * k}, {c * k * k, h}}, 0.25),
          "y2 eps y2 eps'; y2 eps' y2 eps; eps y2 eps' y2; eps' y2 eps y2");
    t.put(real_matrix({{c * k * k, h}, {h, -c * k * k}}, 0.25), "y2 eps' y2 eps'; eps' y2 eps' y2");
    t.put(real_matrix({{h, k}, {k, -h}}, c), "eps eps eps eps'; eps eps eps' eps; eps eps' eps eps; eps' eps eps eps");
    t.put(real_matrix({{1, (s5 / 20) * k * k}, {(s5 / 20) * k * k, -1}}, -s5 * h / 10),
          "eps eps' eps' eps'; eps' eps eps' eps'; eps' eps' eps eps'; eps' eps' eps' eps");
    t.put(real_matrix({{0.5, 0.5, r2}, {0.5, 0.5, -r2}, {r2, -r2, 0}}), "y1 y1 y1 y1; y2 y2 y2 y2");
    t.put(real_matrix({{1, s2, s2}, {s2, -phi, phi_inv}, {s2, phi_inv, -phi}}, 1 / s5), "eps eps eps eps; eps' eps' eps' eps'");
    t.put(real_matrix({{1, -s2, -s2}, {s2, phi, -phi_inv}, {s2, -phi_inv, phi}}, 1 / s5), "eps eps eps' eps'; eps' eps' eps eps");
    t.put(real_matrix({{-1, s2, s2}, {s2, phi, -phi_inv}, {s2, -phi_inv, phi}}, 1 / s5), "eps eps' eps eps'; eps' eps eps' eps");
    t.put(real_matrix({{1, s2, s2}, {-s2, phi, -phi_inv}, {-s2, -phi_inv, phi}}, 1 / s5), "eps eps' eps' eps; eps' eps eps eps'");
    t.fill_trivial_scalars();

    t.put_r(expi_pi(6.0 / 5), "y1 y1 1");
    t.put_r(expi_pi(1.0 / 5), "y1 y1 z");
    t.put_r(expi_pi(4.0 / 5), "y1 y1 y2");
    t.put_r(Complex(0, -1), "eps eps 1");
    t.put_r(expi_pi(11.0 / 10), "eps eps y1");
    t.put_r(expi_pi(-1.0 / 10), "eps eps y2");

    return Category("so5_2", labels, fusion, std::move(t.f), std::move(t.r), {{"h", h}, {"k", k}});
}

}  // namespace

FusionRules metaplectic_fusion_rules(int r) {
    if (r < 1) {
        throw std::invalid_argument("metaplectic_fusion_rules: r must be >= 1");
    }
    const int p = 2 * r + 1;
    const int n = r + 4;
    const int one = 0;
    const int z = 1;
    auto y = [](int j) { return 1 + j; };
    const int eps = r + 2;
    const int epsp = r + 3;
    FusionRules N(n);
    auto add = [&](int a, int b, int c) {
        N.set(a, b, c, true);
        N.set(b, a, c, true);
    };
    for (int a = 0; a < n; a++) {
        add(one, a, a);
    }
    add(z, z, one);
    add(z, eps, epsp);
    add(z, epsp, eps);
    for (int j = 1; j <= r; j++) {
        add(z, y(j), y(j));
        for (int e : {eps, epsp}) {
            add(y(j), e, eps);
            add(y(j), e, epsp);
        }
        add(y(j), y(j), one);
        add(y(j), y(j), z);
        add(y(j), y(j), y(std::min(2 * j, p - 2 * j)));
        for (int i = 1; i <= r; i++) {
            if (i != j) {
                add(y(i), y(j), y(std::abs(i - j)));
                add(y(i), y(j), y(std::min(i + j, p - i - j)));
            }
        }
    }
    add(eps, eps, one);
    add(epsp, epsp, one);
    add(eps, epsp, z);
    for (int j = 1; j <= r; j++) {
        add(eps, eps, y(j));
        add(epsp, epsp, y(j));
        add(eps, epsp, y(j));
    }
    return N;
}

Category builtin_category(std::string_view name) {
    if (name == "su2_4" || name == "so3_2") {
        return make_su2_4();
    }
    if (name == "so5_2") {
        return make_so5_2();
    }
    throw std::invalid_argument("unknown builtin category '" + std::string(name) + "' (expected su2_4 or so5_2)");
}

std::vector<std::string> builtin_category_names() {
    return {"su2_4", "so5_2"};
}

}  // namespace metaplectic
