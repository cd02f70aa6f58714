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

#ifndef METAPLECTIC_LINALG_H
#define METAPLECTIC_LINALG_H

#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace metaplectic {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense unitary. Unitarity is a checked property, not enforced by the type.
using Unitary = Matrix;

/// An n x k matrix with orthonormal columns.
using Isometry = Matrix;

inline constexpr double kPi = std::numbers::pi;

/// e^{i pi t}.
inline Complex expi_pi(double t) {
    return std::polar(1.0, kPi * t);
}

/// omega_d^k = e^{2 pi i k / d}.
inline Complex root_of_unity(int d, long long k = 1) {
    long long r = ((k % d) + d) % d;
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / d);
}

/// max_ij |A_ij|.
double max_abs(const Matrix &m);

/// max_ij |(U^dagger U - I)_ij|; requires a square or tall matrix.
double unitarity_residual(const Matrix &u);

/// max_ij |A_ij - B_ij|; dimensions must agree.
double max_abs_diff(const Matrix &a, const Matrix &b);

struct PhaseComparison {
    bool equal = false;
    Complex phase{1.0, 0.0};
    double residual = 0.0;
};

/// Decides whether u = theta * v for a unit scalar theta. theta is taken from
/// the entry of v with largest modulus (smallest (row, col) among entries
/// within 1e-9 of the maximum), so the result is deterministic.
PhaseComparison equal_up_to_phase(const Matrix &u, const Matrix &v, double tol);

/// Index (row-major) of the max-modulus entry, first among near-ties.
std::pair<Eigen::Index, Eigen::Index> dominant_entry(const Matrix &m, double tie_tol = 1e-9);

/// Orthonormal basis for the column span of m (rank cut at tol).
Matrix orthonormal_span(const Matrix &m, double tol = 1e-9);

/// Orthonormal basis of the orthogonal complement of the column span of m.
Matrix orthogonal_complement(const Matrix &m, double tol = 1e-9);

/// Numerical rank from singular values above tol.
int numerical_rank(const Matrix &m, double tol = 1e-9);

/// Kronecker product a (x) b, first factor most significant.
Matrix kron(const Matrix &a, const Matrix &b);

/// Row-major "re+im i" fixed-point rendering, one row per line.
std::string format_matrix(const Matrix &m, int decimals = 12);

std::string format_complex(Complex z, int decimals = 12);

}  // namespace metaplectic

#endif
