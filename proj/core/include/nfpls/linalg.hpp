// SPDX-License-Identifier: Apache-2.0
//
// nfpls: near-field physical-layer security analysis
// Copyright (C) 2026 The nfpls authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NFPLS_LINALG_HPP
#define NFPLS_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nfpls::linalg {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using CSpan = std::span<const Complex>;

// a^H b with extended-precision accumulation.
Complex inner(CSpan a, CSpan b);
double norm_squared(CSpan a);
CVector scaled(CSpan a, double factor);

// Orthonormal basis {q1, q2} of span{h_b, h_e} with q1 = h_b/|h_b|.
// In that basis h_b = (bob_norm, 0) and h_e = (cross, residual_norm).
struct SpanBasis {
    double bob_norm = 0.0;
    Complex cross;
    double residual_norm = 0.0;
    CVector q1;
    CVector q2;  // empty when h_e is numerically parallel to h_b
};
SpanBasis span_basis(CSpan h_b, CSpan h_e);

// Dense Hermitian matrix, row-major.
class DenseHermitian {
public:
    explicit DenseHermitian(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
    void apply(CSpan x, std::span<Complex> y) const;
    double frobenius_norm() const;

    // this += s * u u^H
    void add_outer(CSpan u, double s);
    static DenseHermitian identity(std::size_t n);

private:
    std::size_t n_;
    std::vector<Complex> a_;
};

struct EigenPair {
    double value = 0.0;
    CVector vector;
    int iterations = 0;
    double residual = 0.0;
};

// Algebraically largest eigenpair by power iteration. When the dominant
// eigenvalue is negative it is deflated and the iteration restarted; if two
// eigenvalues of opposite sign tie in magnitude a positive shift breaks the tie.
// Throws NumericalError after max_iterations matrix-vector products.
EigenPair largest_eigenpair(const DenseHermitian& a, double tolerance = 1e-13, int max_iterations = 100000);

// (I + gamma h h^H)^{-1/2} from a dense Hermitian eigendecomposition.
DenseHermitian inverse_sqrt_identity_plus_outer(CSpan h, double gamma);

CVector multiply(const DenseHermitian& a, CSpan x);

} // namespace nfpls::linalg

#endif
