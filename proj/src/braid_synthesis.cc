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

#include "metaplectic/braid_synthesis.h"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace metaplectic {

BraidWord BraidWord::inverse() const {
    BraidWord out{n_strands, {}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        out.letters.push_back(-*it);
    }
    return out;
}

BraidWord BraidWord::pow(int k) const {
    BraidWord base = k < 0 ? inverse() : *this;
    BraidWord out{n_strands, {}};
    for (int i = 0; i < std::abs(k); i++) {
        out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
    }
    return out;
}

BraidWord BraidWord::then(const BraidWord &next) const {
    BraidWord out = *this;
    out.letters.insert(out.letters.end(), next.letters.begin(), next.letters.end());
    return out;
}

std::string BraidWord::to_string() const {
    std::string out;
    for (size_t i = 0; i < letters.size(); i++) {
        out += (i ? " " : "") + std::to_string(letters[i]);
    }
    return out;
}

namespace {

struct Named {
    const char *name;
    const char *text;
};

constexpr Named kNamed[] = {
    {"p", "1 2 1"},
    {"q", "3 2 3"},
    {"Hword", "q q p q q"},
    {"s1", "2 1 3 2"},
    {"s2", "4 3 5 4"},
    {"s3", "6 5 7 6"},
    {"CZword", "s1^-1 s2^2 s1 s3^-1 s2^2 s3"},
};

std::vector<int> expand(std::string_view text, int depth);

std::vector<int> expand_token(const std::string &tok, int depth) {
    if (depth > 8) {
        throw std::logic_error("named word recursion too deep");
    }
    char *end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end != tok.c_str() && *end == '\0') {
        if (v == 0) {
            throw std::invalid_argument("braid letter 0 is not a generator");
        }
        return {static_cast<int>(v)};
    }
    std::string base = tok;
    int power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
        base = tok.substr(0, caret);
        std::string exp = tok.substr(caret + 1);
        long p = std::strtol(exp.c_str(), &end, 10);
        if (exp.empty() || *end != '\0') {
            throw std::invalid_argument("bad exponent in braid token '" + tok + "'");
        }
        power = static_cast<int>(p);
    }
    for (const auto &n : kNamed) {
        if (base == n.name) {
            BraidWord w{0, expand(n.text, depth + 1)};
            return w.pow(power).letters;
        }
    }
    throw std::invalid_argument("unknown braid token '" + tok + "'");
}

std::vector<int> expand(std::string_view text, int depth) {
    std::istringstream in{std::string(text)};
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        auto part = expand_token(tok, depth);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace

std::optional<std::vector<int>> named_word(std::string_view name) {
    for (const auto &n : kNamed) {
        if (name == n.name) {
            return expand(n.text, 0);
        }
    }
    return std::nullopt;
}

std::vector<std::string> named_word_names() {
    std::vector<std::string> out;
    for (const auto &n : kNamed) {
        out.emplace_back(n.name);
    }
    return out;
}

BraidWord parse_braid_word(std::string_view text, int n_strands) {
    BraidWord w{n_strands, expand(text, 0)};
    for (int l : w.letters) {
        if (std::abs(l) < 1 || std::abs(l) > n_strands - 1) {
            throw std::invalid_argument("braid letter " + std::to_string(l) + " outside 1.." +
                                        std::to_string(n_strands - 1));
        }
    }
    return w;
}

Unitary eval_word(const BraidRep &rep, const BraidWord &w) {
    if (w.n_strands != rep.n_strands()) {
        throw std::invalid_argument("braid word has " + std::to_string(w.n_strands) + " strands, rep has " +
                                    std::to_string(rep.n_strands()));
    }
    auto d = static_cast<Eigen::Index>(rep.dim());
    Matrix u = Matrix::Identity(d, d);
    for (int l : w.letters) {
        const Matrix &g = rep.sigma(std::abs(l));
        u = u * (l > 0 ? g : Matrix(g.adjoint()));
    }
    return u;
}

IdentityCheck verify_matrix(const Unitary &u,
                            const Unitary &target,
                            const std::optional<Isometry> &subspace,
                            double tol) {
    Matrix restricted = u;
    IdentityCheck out;
    if (subspace) {
        const Matrix &e = *subspace;
        if (e.rows() != u.rows()) {
            throw std::invalid_argument("subspace rows do not match the operator dimension");
        }
        Matrix ue = u * e;
        restricted = e.adjoint() * ue;
        out.leakage = max_abs(ue - e * restricted);
    }
    if (restricted.rows() != target.rows() || restricted.cols() != target.cols()) {
        throw std::invalid_argument("target dimension does not match the restricted operator");
    }
    auto cmp = equal_up_to_phase(restricted, target, tol);
    out.phase = cmp.phase;
    out.residual = cmp.residual;
    out.pass = out.residual < tol && out.leakage < tol;
    return out;
}

IdentityCheck verify_identity(const BraidRep &rep,
                              const BraidWord &w,
                              const Unitary &target,
                              const std::optional<Isometry> &subspace,
                              double tol) {
    return verify_matrix(eval_word(rep, w), target, subspace, tol);
}

std::string closure_key(const Matrix &m, bool projective) {
    Matrix c = m;
    if (projective) {
        auto [r, k] = dominant_entry(m);
        Complex z = m(r, k);
        c *= std::conj(z) / std::abs(z);
    }
    std::string key;
    key.reserve(static_cast<size_t>(c.size()) * 2 * sizeof(std::int64_t));
    for (Eigen::Index i = 0; i < c.rows(); i++) {
        for (Eigen::Index j = 0; j < c.cols(); j++) {
            for (double part : {c(i, j).real(), c(i, j).imag()}) {
                std::int64_t q = std::llround(part * 1e6);
                key.append(reinterpret_cast<const char *>(&q), sizeof(q));
            }
        }
    }
    return key;
}

namespace {

Matrix canonical(const Matrix &m, bool projective) {
    if (!projective) {
        return m;
    }
    auto [r, k] = dominant_entry(m);
    Complex z = m(r, k);
    return m * (std::conj(z) / std::abs(z));
}

bool commutes(const Matrix &a, const Matrix &b, bool projective) {
    Matrix ab = a * b;
    Matrix ba = b * a;
    if (projective) {
        return equal_up_to_phase(ab, ba, 1e-6).equal;
    }
    return max_abs_diff(ab, ba) < 1e-6;
}

}  // namespace

ClosureResult group_closure(const std::vector<Unitary> &generators, bool projective, long long cap) {
    if (generators.empty()) {
        throw std::invalid_argument("group_closure: no generators");
    }
    auto dim = generators[0].rows();
    std::vector<Matrix> gens;
    for (const auto &g : generators) {
        if (g.rows() != dim || g.cols() != dim) {
            throw std::invalid_argument("group_closure: generators differ in dimension");
        }
        Matrix h = g;
        if (!projective) {
            double arg = std::arg(g.determinant());
            h *= std::polar(1.0, -arg / static_cast<double>(dim));
        }
        gens.push_back(canonical(h, projective));
    }

    ClosureResult out;
    std::unordered_map<std::string, size_t> index;
    Matrix id = Matrix::Identity(dim, dim);
    out.elements.push_back(id);
    index.emplace(closure_key(id, projective), 0);
    std::deque<size_t> queue{0};
    while (!queue.empty() && !out.cap_exceeded) {
        size_t x = queue.front();
        queue.pop_front();
        for (const auto &g : gens) {
            Matrix y = canonical(g * out.elements[x], projective);
            auto [it, inserted] = index.emplace(closure_key(y, projective), out.elements.size());
            if (inserted) {
                out.elements.push_back(std::move(y));
                queue.push_back(out.elements.size() - 1);
                if (static_cast<long long>(out.elements.size()) > cap) {
                    out.cap_exceeded = true;
                    break;
                }
            }
        }
    }
    out.order = static_cast<long long>(out.elements.size());
    if (out.cap_exceeded) {
        return out;
    }

    std::string id_key = closure_key(id, projective);
    for (const auto &e : out.elements) {
        bool central = true;
        for (const auto &g : gens) {
            if (!commutes(e, g, projective)) {
                central = false;
                break;
            }
        }
        out.center_size += central ? 1 : 0;

        long long k = 1;
        Matrix power = e;
        while (closure_key(power, projective) != id_key) {
            power = canonical(e * power, projective);
            k++;
            if (k > out.order) {
                throw std::logic_error("group_closure: element order exceeds group order");
            }
        }
        out.order_histogram[k]++;
    }
    return out;
}

}  // namespace metaplectic
