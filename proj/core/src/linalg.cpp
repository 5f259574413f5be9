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

#include "nfpls/linalg.hpp"

#include "nfpls/error.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <sstream>

namespace nfpls::linalg {

Complex inner(CSpan a, CSpan b)
{
    if (a.size() != b.size()) throw DomainError("inner product of vectors with different lengths");
    std::complex<long double> acc = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(std::complex<long double>(a[i].real(), a[i].imag())) *
               std::complex<long double>(b[i].real(), b[i].imag());
    return {double(acc.real()), double(acc.imag())};
}

double norm_squared(CSpan a)
{
    long double acc = 0.0L;
    for (const auto& v : a) acc += (long double)v.real() * v.real() + (long double)v.imag() * v.imag();
    return double(acc);
}

CVector scaled(CSpan a, double factor)
{
    CVector out(a.begin(), a.end());
    for (auto& v : out) v *= factor;
    return out;
}

SpanBasis span_basis(CSpan h_b, CSpan h_e)
{
    if (h_b.size() != h_e.size()) throw DomainError("span_basis: vectors have different lengths");
    SpanBasis s;
    s.bob_norm = std::sqrt(norm_squared(h_b));
    if (!(s.bob_norm > 0.0)) throw DegenerateInputError("span_basis: zero Bob channel");
    s.q1 = scaled(h_b, 1.0 / s.bob_norm);

    CVector v(h_e.begin(), h_e.end());
    Complex c = 0.0;
    // Two Gram-Schmidt passes keep q2 orthogonal to q1 to working precision.
    for (int pass = 0; pass < 2; ++pass) {
        const Complex cp = inner(s.q1, v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= cp * s.q1[i];
        c += cp;
    }
    s.cross = c;
    s.residual_norm = std::sqrt(norm_squared(v));
    if (s.residual_norm > 0.0) s.q2 = scaled(v, 1.0 / s.residual_norm);
    return s;
}

DenseHermitian::DenseHermitian(std::size_t n) : n_(n), a_(n * n, Complex(0.0)) {}

DenseHermitian DenseHermitian::identity(std::size_t n)
{
    DenseHermitian m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void DenseHermitian::apply(CSpan x, std::span<Complex> y) const
{
    for (std::size_t i = 0; i < n_; ++i) {
        const Complex* row = a_.data() + i * n_;
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

double DenseHermitian::frobenius_norm() const
{
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

void DenseHermitian::add_outer(CSpan u, double s)
{
    if (u.size() != n_) throw DomainError("add_outer: dimension mismatch");
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] += s * u[i] * std::conj(u[j]);
}

CVector multiply(const DenseHermitian& a, CSpan x)
{
    if (x.size() != a.size()) throw DomainError("multiply: dimension mismatch");
    CVector y(a.size());
    a.apply(x, y);
    return y;
}

namespace {

struct Iteration {
    double value = 0.0;
    CVector vector;
    double residual = 0.0;
    int steps = 0;
    bool converged = false;
};

void normalize(CVector& x)
{
    const double n = std::sqrt(norm_squared(x));
    for (auto& v : x) v /= n;
}

// Power iteration on (A - sum_k d_k v_k v_k^H + shift I), returning the
// Rayleigh quotient of the unshifted deflated operator.
Iteration iterate(const DenseHermitian& a, const std::vector<EigenPair>& deflated, double shift, double scale,
                  double tol, int budget, std::uint64_t seed)
{
    const std::size_t n = a.size();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    CVector x(n), y(n);
    for (auto& v : x) v = {gauss(rng), gauss(rng)};

    auto op = [&](const CVector& in, CVector& out) {
        a.apply(in, out);
        for (const auto& p : deflated) {
            const Complex c = inner(p.vector, in);
            for (std::size_t i = 0; i < n; ++i) out[i] -= p.value * c * p.vector[i];
        }
    };
    for (const auto& p : deflated) {
        const Complex c = inner(p.vector, x);
        for (std::size_t i = 0; i < n; ++i) x[i] -= c * p.vector[i];
    }
    normalize(x);

    Iteration it;
    for (int k = 1; k <= budget; ++k) {
        op(x, y);
        const double theta = inner(x, y).real();
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) r2 += std::norm(y[i] - theta * x[i]);
        it.value = theta;
        it.residual = std::sqrt(r2);
        it.steps = k;
        if (it.residual <= tol * scale) {
            it.vector = x;
            it.converged = true;
            return it;
        }
        for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
        const double ny = std::sqrt(norm_squared(y));
        if (!(ny > 0.0)) {
            // x lies in the null space: eigenvalue zero.
            it.value = 0.0;
            it.residual = 0.0;
            it.vector = x;
            it.converged = true;
            return it;
        }
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
    }
    it.vector = x;
    return it;
}

} // namespace

EigenPair largest_eigenpair(const DenseHermitian& a, double tolerance, int max_iterations)
{
    const std::size_t n = a.size();
    if (n == 0) throw DomainError("largest_eigenpair: empty matrix");
    const double scale = a.frobenius_norm();
    if (scale == 0.0) {
        EigenPair z;
        z.vector.assign(n, Complex(0.0));
        z.vector[0] = 1.0;
        return z;
    }

    std::vector<EigenPair> deflated;
    int used = 0;
    // An unshifted run first; if it stalls (eigenvalues +l and -l tie in
    // magnitude) retry with a positive shift of half the Frobenius norm.
    const int stall = 5000;
    double shift = 0.0;
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    while (used < max_iterations) {
        const int budget = std::min(shift == 0.0 ? stall : max_iterations, max_iterations - used);
        Iteration it = iterate(a, deflated, shift, scale, tolerance, budget, seed++);
        used += it.steps;
        if (!it.converged) {
            if (shift == 0.0) {
                shift = 0.5 * scale;
                continue;
            }
            break;
        }
        const bool positive_dominant = it.value >= 0.0 || shift != 0.0 || deflated.size() + 1 >= n;
        if (positive_dominant) {
            // The best candidate is this value or the largest one deflated so far.
            EigenPair out{it.value, std::move(it.vector), used, it.residual};
            for (const auto& p : deflated)
                if (p.value > out.value) out = p;
            out.iterations = used;
            return out;
        }
        deflated.push_back({it.value, std::move(it.vector), it.steps, it.residual});
    }
    std::ostringstream msg;
    msg << "power iteration did not converge within " << max_iterations << " steps";
    throw NumericalError(msg.str(), scale);
}

DenseHermitian inverse_sqrt_identity_plus_outer(CSpan h, double gamma)
{
    const auto n = Eigen::Index(h.size());
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(n, n);
    Eigen::Map<const Eigen::VectorXcd> v(h.data(), n);
    q.noalias() += gamma * v * v.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition of the noise-plus-channel matrix failed");
    const Eigen::VectorXd s = es.eigenvalues().cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXcd r = es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
    DenseHermitian out(h.size());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(std::size_t(i), std::size_t(j)) = r(i, j);
    return out;
}

} // namespace nfpls::linalg
