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

#ifndef METAPLECTIC_TESTS_REFERENCE_MATRICES_H
#define METAPLECTIC_TESTS_REFERENCE_MATRICES_H

#include <cmath>

#include "metaplectic/linalg.h"

namespace metaplectic::reference {

inline Complex gamma() {
    return expi_pi(1.0 / 12);
}

inline Complex omega3() {
    return root_of_unity(3);
}

// su2_4 on {-|YY>, |1Y>, |Y1>}.
inline Matrix su2_4_sigma(int i) {
    Complex w = omega3();
    Matrix m = Matrix::Zero(3, 3);
    if (i == 1) {
        m.diagonal() << 1, w, 1;
    } else if (i == 3) {
        m.diagonal() << 1, 1, w;
    } else {
        Complex on(0.5, std::sqrt(3.0) / 6);
        Complex off(-0.5, std::sqrt(3.0) / 6);
        m.setConstant(off);
        m.diagonal().setConstant(on);
    }
    return gamma() * m;
}

// so5_2 on {|Y2Y2>, |1Y1>, |Y2Y1>, |Y1Y2>, |Y11>}.
inline Matrix so5_2_sigma(int i) {
    Complex u = root_of_unity(5);
    Complex v = std::conj(u);
    Complex inv_i(0, -1);
    Matrix m = Matrix::Zero(5, 5);
    if (i == 1) {
        m.diagonal() << u, 1, u, v, v;
        return inv_i * m;
    }
    if (i == 3) {
        m.diagonal() << u, v, v, u, 1;
        return inv_i * m;
    }
    m << 1, v, u, u, v,
         v, 1, v, u, u,
         u, v, 1, v, u,
         u, u, v, 1, v,
         v, u, u, v, 1;
    return inv_i / std::sqrt(5.0) * m;
}

// su2_4 V^{1111}_0 on {|00>, |22>}, each up to a phase.
inline Matrix qubit_sigma(int i) {
    Complex w = omega3();
    Matrix m(2, 2);
    if (i == 2) {
        Complex r(0, std::sqrt(6.0) / 3);
        m << Complex(-0.5, std::sqrt(3.0) / 6), r, r, Complex(-0.5, -std::sqrt(3.0) / 6);
        return std::conj(w) * m;
    }
    m << w, 0, 0, 1;
    return m;
}

}  // namespace metaplectic::reference

#endif
