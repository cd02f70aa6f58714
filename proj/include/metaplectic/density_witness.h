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

#ifndef METAPLECTIC_DENSITY_WITNESS_H
#define METAPLECTIC_DENSITY_WITNESS_H

#include <vector>

#include "metaplectic/linalg.h"
#include "metaplectic/report.h"

namespace metaplectic {

/// W = H D H^-1 D^-1 and Z = H D^-1 H^-1 D.
struct CommutatorPair {
    Unitary base;
    Unitary diag;
    Unitary w;
    Unitary z;
};

CommutatorPair commutator_pair(const Unitary &base, const Unitary &diag);

/// Eigenvalues sorted by argument in (-pi, pi].
std::vector<Complex> sorted_eigenvalues(const Matrix &u);

/// The stated fixed vector of W[i], Z[i] for d = 3: E_0 = -|1> + |2>,
/// E_1 = -w|0> + |2>, E_2 = -w|0> + |1>, w = e^{2 pi i/3}.
Vector qutrit_fixed_vector(int i);

struct QutritWitness {
    int i = 0;
    std::vector<Complex> w_eigenvalues;
    std::vector<Complex> z_eigenvalues;
    double eigenvalue_residual = 0;   // vs {(2-i sqrt5)/3, 1, (2+i sqrt5)/3}
    double polynomial_residual = 0;   // max |3x^2 - 4x + 3| over the nontrivial ones
    Vector fixed_vector;              // unit, dominant entry positive real
    double fixed_vector_residual = 0; // |W v - v|, |Z v - v|
    double fixed_overlap = 0;         // |<E_i, v>| / |E_i|, 1 when parallel
    double commutator_norm = 0;       // max |WZ - ZW|
    double det_residual = 0;          // |det W - 1|, |det Z - 1|

    bool pass(double tol = 1e-9) const;
    KeyValues report() const;
};

/// W[i] = H3 P[i] H3^-1 P[i]^-1 and Z[i] = H3 P[i]^-1 H3^-1 P[i].
QutritWitness qutrit_commutator_witness(int i);

struct InfiniteOrderWitness {
    bool pass = false;
    double min_distance = 0;  // smallest |lambda^k - 1| over screened eigenvalues
    long long worst_k = 0;
    int screened = 0;         // eigenvalues with |lambda - 1| > delta
};

/// Finite root-of-unity screen: every eigenvalue with |lambda - 1| > delta must
/// keep |lambda^k - 1| > delta for 1 <= k <= K. Passing is evidence of
/// infinite order, not a proof. Fails when no eigenvalue is screened.
InfiniteOrderWitness infinite_order_witness(const Matrix &u, long long K = 10000, double delta = 1e-6);

/// basis^dagger u basis for an orthonormal column basis.
Matrix restrict_to(const Matrix &u, const Matrix &basis);

struct ImprimitivityWitness {
    Vector input;
    Vector output;
    std::vector<double> schmidt_coefficients;
    int schmidt_rank = 0;
};

/// Applies u to ((1/sqrt d) sum_i |i>) (x) |0> and returns the Schmidt rank of
/// the image (singular values above 1e-9).
ImprimitivityWitness imprimitivity_witness(const Unitary &u, int d);

struct QupitSubspaceReport {
    int p = 0;
    struct Entry {
        int i = 0;
        double identity_on_complement = 0;  // max over X[i], Y[i]
        double commutator_on_subspace = 0;
        bool x_infinite = false;
        bool y_infinite = false;
        double overlap_with_previous = 0;   // |P_prev P_i|, > 0 means not orthogonal
    };
    std::vector<Entry> entries;
    int span_rank = 0;

    bool pass(double tol = 1e-9) const;
    KeyValues report() const;
};

/// X[i] = H Q[i] H^-1 Q[i]^-1 and Y[i] = H Q[i]^-1 H^-1 Q[i] on
/// S_i = span{|i>, sum_{j != i} w^{ij} |j>}. p must be an odd prime >= 5.
QupitSubspaceReport qupit_subspace_chain(int p);

/// Column basis of S_i in C^p.
Matrix qupit_subspace(int p, int i);

struct So5PartialReport {
    Vector fixed_vector;  // w^-1|2> + phi w^2|3> + |4>, w = e^{2 pi i/5}
    std::vector<double> fix_residual;  // |X[1,2,k] v - v| for k = 1..4
    std::vector<InfiniteOrderWitness> infinite;
    int commutant_dimension = 0;  // joint commutant on the 4-dim complement
    double r_residual = 0;        // |R[1,2,1] - diag(w, w^-1, 1, 1, 1)|

    bool pass(double tol = 1e-8) const;
    KeyValues report() const;
};

/// X[i,j,k] = H5 R[i,j,k] H5^-1 R[i,j,k]^-1 with 1-based i, j.
Unitary so5_x_gate(int i, int j, int k);
So5PartialReport so5_partial_results(double commutant_tol = 1e-7);

/// Dimension of {M : A M = M A for all A}, from the null space of the
/// stacked Sylvester operators.
int commutant_dimension(const std::vector<Matrix> &ops, double tol = 1e-7);

}  // namespace metaplectic

#endif
