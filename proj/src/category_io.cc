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

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace metaplectic {

namespace {

std::string decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_words(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string w;
    while (ss >> w) {
        out.push_back(w);
    }
    return out;
}

double parse_number(const std::string &s, int line) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw CategoryParseError(CategoryParseError::Kind::kMalformed, line, "expected a number, got '" + s + "'");
    }
}

struct PendingF {
    int line = 0;
    std::map<std::pair<std::string, std::string>, Complex> entries;
};

}  // namespace

std::string serialize_category(const Category &cat) {
    std::string out;
    out += "# category " + cat.name() + "\n";
    for (const auto &label : cat.labels()) {
        out += "label " + label.name + " qdim " + decimal(label.qdim) + "\n";
    }
    for (LabelId a = 0; a < cat.num_labels(); a++) {
        for (LabelId b = 0; b < cat.num_labels(); b++) {
            auto channels = cat.fuse(a, b);
            if (channels.empty()) {
                continue;
            }
            out += "fuse " + cat.label_name(a) + " " + cat.label_name(b) + " ->";
            for (size_t i = 0; i < channels.size(); i++) {
                out += (i ? "," : " ") + cat.label_name(channels[i]);
            }
            out += "\n";
        }
    }
    for (const auto &[key, block] : cat.stored_f()) {
        auto rows = cat.f_rows(key.a, key.b, key.c, key.d);
        auto cols = cat.f_cols(key.a, key.b, key.c, key.d);
        for (size_t r = 0; r < rows.size(); r++) {
            for (size_t c = 0; c < cols.size(); c++) {
                Complex v = block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                out += "F " + cat.label_name(key.a) + " " + cat.label_name(key.b) + " " + cat.label_name(key.c) + " " +
                       cat.label_name(key.d) + " : " + cat.label_name(rows[r]) + " " + cat.label_name(cols[c]) +
                       " = " + decimal(v.real()) + " " + decimal(v.imag()) + "\n";
            }
        }
    }
    for (const auto &[key, value] : cat.stored_r()) {
        out += "R " + cat.label_name(key.a) + " " + cat.label_name(key.b) + " " + cat.label_name(key.c) + " = " +
               decimal(value.real()) + " " + decimal(value.imag()) + "\n";
    }
    return out;
}

Category parse_category(std::string_view text) {
    using Kind = CategoryParseError::Kind;
    std::string name = "parsed";
    bool named = false;
    std::vector<Label> labels;
    std::map<std::string, LabelId> ids;
    std::vector<std::tuple<int, std::string, std::string, std::vector<std::string>>> fuse_lines;
    std::map<std::array<std::string, 4>, PendingF> pending_f;
    std::vector<std::tuple<int, std::array<std::string, 3>, Complex>> r_lines;

    std::stringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            auto words = split_words(raw.substr(hash + 1));
            if (!named && words.size() == 2 && words[0] == "category") {
                name = words[1];
                named = true;
            }
            raw = raw.substr(0, hash);
        }
        auto w = split_words(raw);
        if (w.empty()) {
            continue;
        }
        auto malformed = [&](const std::string &why) {
            return CategoryParseError(Kind::kMalformed, line_no, why + ": '" + raw + "'");
        };
        if (w[0] == "label") {
            if (w.size() != 4 || w[2] != "qdim") {
                throw malformed("expected 'label <name> qdim <decimal>'");
            }
            if (ids.count(w[1])) {
                throw malformed("duplicate label");
            }
            ids[w[1]] = static_cast<LabelId>(labels.size());
            labels.push_back(Label{w[1], parse_number(w[3], line_no), {}});
        } else if (w[0] == "fuse") {
            if (w.size() != 5 || w[3] != "->") {
                throw malformed("expected 'fuse <a> <b> -> <c>[,<c>...]'");
            }
            std::vector<std::string> channels;
            std::stringstream cs(w[4]);
            std::string c;
            while (std::getline(cs, c, ',')) {
                if (c.empty()) {
                    throw malformed("empty fusion channel");
                }
                channels.push_back(c);
            }
            fuse_lines.emplace_back(line_no, w[1], w[2], channels);
        } else if (w[0] == "F") {
            if (w.size() != 11 || w[5] != ":" || w[8] != "=") {
                throw malformed("expected 'F <a> <b> <c> <d> : <n> <m> = <re> <im>'");
            }
            auto &block = pending_f[{w[1], w[2], w[3], w[4]}];
            if (block.line == 0) {
                block.line = line_no;
            }
            block.entries[{w[6], w[7]}] = Complex(parse_number(w[9], line_no), parse_number(w[10], line_no));
        } else if (w[0] == "R") {
            if (w.size() != 7 || w[4] != "=") {
                throw malformed("expected 'R <a> <b> <c> = <re> <im>'");
            }
            r_lines.emplace_back(line_no, std::array<std::string, 3>{w[1], w[2], w[3]},
                                 Complex(parse_number(w[5], line_no), parse_number(w[6], line_no)));
        } else {
            throw malformed("unknown directive");
        }
    }
    if (labels.empty()) {
        throw CategoryParseError(Kind::kIncomplete, line_no, "no labels");
    }

    auto lookup = [&](const std::string &label, int line) {
        auto it = ids.find(label);
        if (it == ids.end()) {
            throw CategoryParseError(Kind::kUnknownLabel, line, "unknown label '" + label + "'");
        }
        return it->second;
    };

    FusionRules fusion(static_cast<int>(labels.size()));
    for (const auto &[line, a, b, channels] : fuse_lines) {
        for (const auto &c : channels) {
            fusion.set(lookup(a, line), lookup(b, line), lookup(c, line), true);
        }
    }
    // The receiving Category re-validates admissibility; this pass only
    // produces located error messages.
    Category skel(name, labels, fusion, {}, {});

    FSymbolTable f;
    for (const auto &[key, block] : pending_f) {
        LabelId a = lookup(key[0], block.line);
        LabelId b = lookup(key[1], block.line);
        LabelId c = lookup(key[2], block.line);
        LabelId d = lookup(key[3], block.line);
        auto rows = skel.f_rows(a, b, c, d);
        auto cols = skel.f_cols(a, b, c, d);
        if (rows.empty()) {
            throw CategoryParseError(Kind::kInadmissible, block.line, "inadmissible " + skel.describe_f(a, b, c, d));
        }
        Matrix m = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        size_t seen = 0;
        for (const auto &[nm, value] : block.entries) {
            LabelId n = lookup(nm.first, block.line);
            LabelId mm = lookup(nm.second, block.line);
            auto ri = std::find(rows.begin(), rows.end(), n);
            auto ci = std::find(cols.begin(), cols.end(), mm);
            if (ri == rows.end() || ci == cols.end()) {
                throw CategoryParseError(Kind::kInadmissible, block.line,
                                         "inadmissible channel (" + nm.first + "," + nm.second + ") in " +
                                             skel.describe_f(a, b, c, d));
            }
            m(ri - rows.begin(), ci - cols.begin()) = value;
            seen++;
        }
        if (seen != rows.size() * cols.size()) {
            throw CategoryParseError(Kind::kIncomplete, block.line,
                                     "incomplete block " + skel.describe_f(a, b, c, d) + " (" + std::to_string(seen) +
                                         " of " + std::to_string(rows.size() * cols.size()) + " entries)");
        }
        f[FKey{a, b, c, d}] = m;
    }

    RSymbolTable r;
    for (const auto &[line, key, value] : r_lines) {
        LabelId a = lookup(key[0], line);
        LabelId b = lookup(key[1], line);
        LabelId c = lookup(key[2], line);
        if (!fusion.admissible(a, b, c)) {
            throw CategoryParseError(Kind::kInadmissible, line,
                                     "inadmissible R " + key[0] + " " + key[1] + " " + key[2]);
        }
        r[RKey{a, b, c}] = value;
    }
    return Category(name, labels, fusion, std::move(f), std::move(r));
}

Category load_category_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open category file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_category(ss.str());
}

void save_category_file(const Category &cat, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::ios_base::failure("cannot write category file '" + path + "'");
    }
    out << serialize_category(cat);
}

}  // namespace metaplectic
