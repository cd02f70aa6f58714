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

#include "metaplectic/density_witness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "metaplectic/qudit_gates.h"

namespace metaplectic {

namespace {

Vector phase_normalized(const Vector &v) {
    Vector u = v / v.norm();
    Eigen::Index best = 0;
    for (Eigen::Index i = 0; i < u.size(); i++) {
        if (std::abs(u(i)) > std::abs(u(best)) + 1e-9) {
            best = i;
        }
    }
    return u * (std::conj(u(best)) / std::abs(u(best)));
}

// Unit vector spanning the common +1 eigenspace (smallest right singular vector).
Vector common_fixed_vector(const std::vector<Matrix> &ops) {
    auto n = ops[0].rows();
    Matrix stacked(n * static_cast<Eigen::Index>(ops.size()), n);
    for (size_t k = 0; k < ops.size(); k++) {
        stacked.middleRows(static_cast<Eigen::Index>(k) * n, n) = ops[k] - Matrix::Identity(n, n);
    }
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
    return phase_normalized(svd.matrixV().col(n - 1));
}

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) {
        return false;
    }
    for (int f = 3; f * f <= p; f += 2) {
        if (p % f == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

CommutatorPair commutator_pair(const Unitary &base, const Unitary &diag) {
    Matrix bi = base.inverse();
    Matrix di = diag.inverse();
    return {base, diag, base * diag * bi * di, base * di * bi * diag};
}

std::vector<Complex> sorted_eigenvalues(const Matrix &u) {
    Eigen::ComplexEigenSolver<Matrix> es(u, false);
    std::vector<Complex> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    return out;
}

Vector qutrit_fixed_vector(int i) {
    Complex w = root_of_unity(3);
    Vector e(3);
    switch (i) {
        case 0:
            e << 0, -1, 1;
            break;
        case 1:
            e << -w, 0, 1;
            break;
        case 2:
            e << -w, 1, 0;
            break;
        default:
            throw std::out_of_range("qutrit index must be 0, 1 or 2");
    }
    return e;
}

bool QutritWitness::pass(double tol) const {
    return eigenvalue_residual < tol && polynomial_residual < tol && fixed_vector_residual < tol &&
           std::abs(fixed_overlap - 1) < tol && commutator_norm > 1e-3 && det_residual < tol;
}

KeyValues QutritWitness::report() const {
    KeyValues kv;
    std::string p = "qutrit[" + std::to_string(i) + "].";
    for (size_t k = 0; k < w_eigenvalues.size(); k++) {
        kv.add(p + "w_eig" + std::to_string(k), w_eigenvalues[k]);
    }
    for (size_t k = 0; k < z_eigenvalues.size(); k++) {
        kv.add(p + "z_eig" + std::to_string(k), z_eigenvalues[k]);
    }
    kv.add(p + "eigenvalue_residual", eigenvalue_residual);
    kv.add(p + "polynomial_residual", polynomial_residual);
    for (Eigen::Index k = 0; k < fixed_vector.size(); k++) {
        kv.add(p + "fixed" + std::to_string(k), fixed_vector(k));
    }
    kv.add(p + "fixed_vector_residual", fixed_vector_residual);
    kv.add(p + "fixed_overlap", fixed_overlap);
    kv.add(p + "commutator_norm", commutator_norm);
    kv.add(p + "det_residual", det_residual);
    kv.add(p + "pass", pass());
    return kv;
}

QutritWitness qutrit_commutator_witness(int i) {
    if (i < 0 || i > 2) {
        throw std::out_of_range("qutrit index must be 0, 1 or 2");
    }
    auto pair = commutator_pair(hadamard(3), p_gate(3, i));
    QutritWitness out;
    out.i = i;
    out.w_eigenvalues = sorted_eigenvalues(pair.w);
    out.z_eigenvalues = sorted_eigenvalues(pair.z);
    const double s5 = std::sqrt(5.0);
    const std::vector<Complex> expected = {{2.0 / 3, -s5 / 3}, {1, 0}, {2.0 / 3, s5 / 3}};
    for (const auto *eig : {&out.w_eigenvalues, &out.z_eigenvalues}) {
        for (size_t k = 0; k < 3; k++) {
            out.eigenvalue_residual = std::max(out.eigenvalue_residual, std::abs((*eig)[k] - expected[k]));
        }
        for (size_t k : {0u, 2u}) {
            Complex x = (*eig)[k];
            out.polynomial_residual = std::max(out.polynomial_residual, std::abs(3.0 * x * x - 4.0 * x + 3.0));
        }
    }
    out.fixed_vector = common_fixed_vector({pair.w, pair.z});
    out.fixed_vector_residual = std::max((pair.w * out.fixed_vector - out.fixed_vector).cwiseAbs().maxCoeff(),
                                         (pair.z * out.fixed_vector - out.fixed_vector).cwiseAbs().maxCoeff());
    Vector e = qutrit_fixed_vector(i);
    out.fixed_overlap = std::abs(e.dot(out.fixed_vector)) / e.norm();
    out.commutator_norm = max_abs(pair.w * pair.z - pair.z * pair.w);
    out.det_residual = std::max(std::abs(pair.w.determinant() - 1.0), std::abs(pair.z.determinant() - 1.0));
    return out;
}

InfiniteOrderWitness infinite_order_witness(const Matrix &u, long long K, double delta) {
    if (K < 1) {
        throw std::invalid_argument("infinite_order_witness: K must be positive");
    }
    InfiniteOrderWitness out;
    out.min_distance = std::numeric_limits<double>::infinity();
    Eigen::ComplexEigenSolver<Matrix> es(u, false);
    for (Eigen::Index n = 0; n < es.eigenvalues().size(); n++) {
        Complex lambda = es.eigenvalues()(n);
        if (std::abs(lambda - 1.0) <= delta) {
            continue;
        }
        out.screened++;
        double theta = std::arg(lambda);
        for (long long k = 1; k <= K; k++) {
            double d = std::abs(std::polar(1.0, theta * static_cast<double>(k)) - 1.0);
            if (d < out.min_distance) {
                out.min_distance = d;
                out.worst_k = k;
            }
        }
    }
    out.pass = out.screened > 0 && out.min_distance > delta;
    return out;
}

Matrix restrict_to(const Matrix &u, const Matrix &basis) {
    return basis.adjoint() * u * basis;
}

ImprimitivityWitness imprimitivity_witness(const Unitary &u, int d) {
    if (u.rows() != d * d || u.cols() != d * d) {
        throw std::invalid_argument("imprimitivity_witness: gate must be d^2 x d^2");
    }
    ImprimitivityWitness out;
    Vector plus = Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
    Vector zero = Vector::Zero(d);
    zero(0) = 1;
    out.input = kron(plus, zero);
    out.output = u * out.input;
    Matrix m(d, d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            m(i, j) = out.output(i * d + j);
        }
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    for (Eigen::Index k = 0; k < svd.singularValues().size(); k++) {
        double s = svd.singularValues()(k);
        out.schmidt_coefficients.push_back(s);
        out.schmidt_rank += s > 1e-9 ? 1 : 0;
    }
    return out;
}

Matrix qupit_subspace(int p, int i) {
    Matrix s = Matrix::Zero(p, 2);
    s(i, 0) = 1;
    for (int j = 0; j < p; j++) {
        if (j != i) {
            s(j, 1) = root_of_unity(p, static_cast<long long>(i) * j);
        }
    }
    return s;
}

bool QupitSubspaceReport::pass(double tol) const {
    if (entries.empty() || span_rank != p) {
        return false;
    }
    for (const auto &e : entries) {
        if (e.identity_on_complement >= tol || e.commutator_on_subspace <= 1e-3 || !e.x_infinite ||
            !e.y_infinite) {
            return false;
        }
        if (e.i > 0 && e.overlap_with_previous <= 1e-3) {
            return false;
        }
    }
    return true;
}

KeyValues QupitSubspaceReport::report() const {
    KeyValues kv;
    std::string p0 = "qupit[" + std::to_string(p) + "].";
    for (const auto &e : entries) {
        std::string k = p0 + "S" + std::to_string(e.i) + ".";
        kv.add(k + "identity_on_complement", e.identity_on_complement);
        kv.add(k + "commutator_on_subspace", e.commutator_on_subspace);
        kv.add(k + "x_infinite", e.x_infinite);
        kv.add(k + "y_infinite", e.y_infinite);
        kv.add(k + "overlap_with_previous", e.overlap_with_previous);
    }
    kv.add(p0 + "span_rank", span_rank);
    kv.add(p0 + "pass", pass());
    return kv;
}

QupitSubspaceReport qupit_subspace_chain(int p) {
    if (!is_odd_prime(p) || p < 5) {
        throw std::invalid_argument("qupit_subspace_chain: p must be an odd prime >= 5");
    }
    QupitSubspaceReport out;
    out.p = p;
    Matrix h = hadamard(p);
    Matrix all(p, 0);
    for (int i = 0; i < p; i++) {
        auto pair = commutator_pair(h, q_gate(p, i));
        Matrix s = orthonormal_span(qupit_subspace(p, i));
        Matrix perp = orthogonal_complement(s);
        QupitSubspaceReport::Entry e;
        e.i = i;
        Matrix id = Matrix::Identity(perp.cols(), perp.cols());
        e.identity_on_complement = std::max(max_abs_diff(restrict_to(pair.w, perp), id),
                                            max_abs_diff(restrict_to(pair.z, perp), id));
        // Leakage out of S_i would also break the restriction.
        e.identity_on_complement =
            std::max(e.identity_on_complement, max_abs(pair.w * perp - perp * restrict_to(pair.w, perp)));
        Matrix xs = restrict_to(pair.w, s);
        Matrix ys = restrict_to(pair.z, s);
        e.commutator_on_subspace = max_abs(xs * ys - ys * xs);
        e.x_infinite = infinite_order_witness(xs).pass;
        e.y_infinite = infinite_order_witness(ys).pass;
        if (i > 0) {
            Matrix prev = orthonormal_span(all);
            e.overlap_with_previous = (prev.adjoint() * s).norm();
        }
        Matrix next(p, all.cols() + 2);
        next << all, qupit_subspace(p, i);
        all = next;
        out.entries.push_back(e);
    }
    out.span_rank = numerical_rank(all);
    return out;
}

Unitary so5_x_gate(int i, int j, int k) {
    Matrix h = hadamard(5);
    Matrix r = r_gate(5, i, j, k);
    return h * r * h.inverse() * r.inverse();
}

int commutant_dimension(const std::vector<Matrix> &ops, double tol) {
    if (ops.empty()) {
        throw std::invalid_argument("commutant_dimension: no operators");
    }
    auto n = ops[0].rows();
    Matrix id = Matrix::Identity(n, n);
    Matrix stacked(n * n * static_cast<Eigen::Index>(ops.size()), n * n);
    for (size_t k = 0; k < ops.size(); k++) {
        // vec(A M - M A) = (I (x) A - A^T (x) I) vec(M), column-major vec.
        stacked.middleRows(static_cast<Eigen::Index>(k) * n * n, n * n) =
            kron(id, ops[k]) - kron(ops[k].transpose(), id);
    }
    Eigen::JacobiSVD<Matrix> svd(stacked);
    int nullity = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); k++) {
        nullity += svd.singularValues()(k) < tol ? 1 : 0;
    }
    return nullity;
}

bool So5PartialReport::pass(double tol) const {
    if (r_residual >= tol || commutant_dimension != 1) {
        return false;
    }
    for (double r : fix_residual) {
        if (r >= tol) {
            return false;
        }
    }
    return std::all_of(infinite.begin(), infinite.end(), [](const auto &w) { return w.pass; });
}

KeyValues So5PartialReport::report() const {
    KeyValues kv;
    kv.add("so5.r121_residual", r_residual);
    for (size_t k = 0; k < fix_residual.size(); k++) {
        std::string p = "so5.X[1,2," + std::to_string(k + 1) + "].";
        kv.add(p + "fix_residual", fix_residual[k]);
        kv.add(p + "infinite_order", infinite[k].pass);
        kv.add(p + "min_distance", infinite[k].min_distance);
    }
    kv.add("so5.commutant_dimension", commutant_dimension);
    kv.add("so5.pass", pass());
    return kv;
}

So5PartialReport so5_partial_results(double commutant_tol) {
    So5PartialReport out;
    Complex w = root_of_unity(5);
    double phi = (std::sqrt(5.0) + 1) / 2;
    out.fixed_vector = Vector::Zero(5);
    out.fixed_vector(2) = std::conj(w);
    out.fixed_vector(3) = phi * w * w;
    out.fixed_vector(4) = 1;

    Matrix r121 = Matrix::Identity(5, 5);
    r121(0, 0) = w;
    r121(1, 1) = std::conj(w);
    out.r_residual = max_abs_diff(r_gate(5, 1, 2, 1), r121);

    Matrix complement = orthogonal_complement(out.fixed_vector);
    std::vector<Matrix> restricted;
    for (int k = 1; k <= 4; k++) {
        Matrix x = so5_x_gate(1, 2, k);
        out.fix_residual.push_back((x * out.fixed_vector - out.fixed_vector).cwiseAbs().maxCoeff());
        out.infinite.push_back(infinite_order_witness(x));
        restricted.push_back(restrict_to(x, complement));
    }
    out.commutant_dimension = commutant_dimension(restricted, commutant_tol);
    return out;
}

}  // namespace metaplectic
