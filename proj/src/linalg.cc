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

#include "metaplectic/linalg.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace metaplectic {

double max_abs(const Matrix &m) {
    double best = 0;
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            best = std::max(best, std::abs(m(r, c)));
        }
    }
    return best;
}

double unitarity_residual(const Matrix &u) {
    return max_abs(u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()));
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    return max_abs(a - b);
}

std::pair<Eigen::Index, Eigen::Index> dominant_entry(const Matrix &m, double tie_tol) {
    double best = 0;
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            best = std::max(best, std::abs(m(r, c)));
        }
    }
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            if (std::abs(m(r, c)) >= best - tie_tol) {
                return {r, c};
            }
        }
    }
    return {0, 0};
}

PhaseComparison equal_up_to_phase(const Matrix &u, const Matrix &v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
    }
    PhaseComparison out;
    if (v.size() == 0) {
        out.equal = true;
        return out;
    }
    auto [r, c] = dominant_entry(v);
    Complex ratio = u(r, c) / v(r, c);
    if (std::abs(v(r, c)) == 0 || std::abs(ratio) == 0) {
        out.phase = 1;
    } else {
        out.phase = ratio / std::abs(ratio);
    }
    out.residual = max_abs(u - out.phase * v);
    out.equal = out.residual < tol;
    return out;
}

Matrix orthonormal_span(const Matrix &m, double tol) {
    if (m.cols() == 0) {
        return Matrix(m.rows(), 0);
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
    int rank = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); k++) {
        if (svd.singularValues()(k) > tol) {
            rank++;
        }
    }
    return svd.matrixU().leftCols(rank);
}

Matrix orthogonal_complement(const Matrix &m, double tol) {
    Eigen::Index n = m.rows();
    if (m.cols() == 0) {
        return Matrix::Identity(n, n);
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
    int rank = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); k++) {
        if (svd.singularValues()(k) > tol) {
            rank++;
        }
    }
    return svd.matrixU().rightCols(n - rank);
}

int numerical_rank(const Matrix &m, double tol) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    int rank = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); k++) {
        if (svd.singularValues()(k) > tol) {
            rank++;
        }
    }
    return rank;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::string format_complex(Complex z, int decimals) {
    // Avoid printing "-0.000000000000".
    double re = std::abs(z.real()) < 0.5 * std::pow(10.0, -decimals) ? 0.0 : z.real();
    double im = std::abs(z.imag()) < 0.5 * std::pow(10.0, -decimals) ? 0.0 : z.imag();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.*f%+.*fi", decimals, re, decimals, im);
    return buf;
}

std::string format_matrix(const Matrix &m, int decimals) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            if (c) {
                out += ' ';
            }
            out += format_complex(m(r, c), decimals);
        }
        out += '\n';
    }
    return out;
}

}  // namespace metaplectic
