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

#ifndef METAPLECTIC_BRAID_SYNTHESIS_H
#define METAPLECTIC_BRAID_SYNTHESIS_H

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metaplectic/braid_rep.h"
#include "metaplectic/linalg.h"

namespace metaplectic {

/// Letters are signed generator indices: +i is sigma_i, -i its inverse. A word
/// is read as a matrix product: w_1 w_2 ... w_k evaluates to
/// g(w_1) g(w_2) ... g(w_k), so the rightmost letter acts first on a state.
struct BraidWord {
    int n_strands = 0;
    std::vector<int> letters;

    BraidWord inverse() const;
    BraidWord pow(int k) const;
    /// Concatenation: this word, then `next`.
    BraidWord then(const BraidWord &next) const;
    std::string to_string() const;
};

/// Whitespace-separated tokens. A token is a signed integer, or a named word
/// optionally raised to an integer power ("s1^-1", "s2^2"). Throws
/// std::invalid_argument on bad tokens or letters outside 1..n_strands-1.
BraidWord parse_braid_word(std::string_view text, int n_strands);

/// Named words: p = 1 2 1, q = 3 2 3, Hword = q q p q q, s1 = 2 1 3 2,
/// s2 = 4 3 5 4, s3 = 6 5 7 6, CZword = s1^-1 s2^2 s1 s3^-1 s2^2 s3.
std::optional<std::vector<int>> named_word(std::string_view name);
std::vector<std::string> named_word_names();

/// Throws std::invalid_argument on a strand-count mismatch.
Unitary eval_word(const BraidRep &rep, const BraidWord &w);

struct IdentityCheck {
    bool pass = false;
    Complex phase{1.0, 0.0};
    double residual = 0;
    double leakage = 0;
};

/// Compares E^dagger U E with target up to phase, and reports the leakage
/// max |(I - E E^dagger) U E|. Without a subspace E is the identity.
IdentityCheck verify_identity(const BraidRep &rep,
                              const BraidWord &w,
                              const Unitary &target,
                              const std::optional<Isometry> &subspace = std::nullopt,
                              double tol = 1e-8);

/// Same comparison for an already evaluated matrix.
IdentityCheck verify_matrix(const Unitary &u,
                            const Unitary &target,
                            const std::optional<Isometry> &subspace = std::nullopt,
                            double tol = 1e-8);

struct ClosureResult {
    long long order = 0;  // elements found; a lower bound when cap_exceeded
    bool cap_exceeded = false;
    long long center_size = 0;
    std::map<long long, long long> order_histogram;  // element order -> count
    std::vector<Unitary> elements;                   // canonical representatives, BFS order
};

/// Hash key of a matrix on a 1e-6 grid. In projective mode the matrix is first
/// rotated so its dominant entry is positive real.
std::string closure_key(const Matrix &m, bool projective);

/// Breadth-first closure of the group generated by `generators`. Projective
/// mode works modulo global phase; linear mode first rescales each generator
/// by the principal root det(U)^(-1/dim). Stops once more than `cap` elements
/// are found.
ClosureResult group_closure(const std::vector<Unitary> &generators, bool projective, long long cap = 100000);

}  // namespace metaplectic

#endif
