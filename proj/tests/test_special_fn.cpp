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

#include "nfpls/error.hpp"
#include "nfpls/special_fn.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <limits>
#include <random>
#include <sstream>

using namespace nfpls;
using nfpls::special::Complex;
using nfpls::test::kPi;

namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST(ComplexErf, Zero) { EXPECT_EQ(special::erf(Complex(0.0, 0.0)), Complex(0.0, 0.0)); }

TEST(ComplexErf, OddAndConjugateSymmetry)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 2000; ++i) {
        const Complex z(u(rng), u(rng));
        const Complex f = special::erf(z);
        EXPECT_LE(std::abs(special::erf(-z) + f), 1e-14 * std::abs(f));
        EXPECT_LE(std::abs(special::erf(std::conj(z)) - std::conj(f)), 1e-14 * std::abs(f));
    }
}

TEST(ComplexErf, ThreeDecibelPoint)
{
    const double u = 0.79;
    const Complex z = std::sqrt(kPi) * std::polar(1.0, kPi / 4) * u;
    const double f = std::pow(std::abs(special::erf(z) / (2.0 * u)), 4);
    EXPECT_NEAR(f, 0.5, 0.005);
}

TEST(ComplexErf, RealAxisMatchesStandardLibrary)
{
    for (double x = -6.0; x <= 6.0; x += 0.01) {
        const Complex f = special::erf(Complex(x, 0.0));
        EXPECT_NEAR(f.real(), std::erf(x), 1e-13 * std::max(1e-3, std::abs(std::erf(x)))) << x;
        EXPECT_EQ(f.imag(), 0.0);
    }
}

TEST(ComplexErf, MatchesAdaptiveIntegrationOfDefiningIntegral)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> radius(0.0, 5.0), angle(-kPi, kPi);
    for (int i = 0; i < 300; ++i) {
        const Complex z = std::polar(radius(rng), angle(rng));
        if (std::abs(z) < 1e-12) continue;
        const Complex want = test::erf_by_quadrature(z);
        EXPECT_LE(rel_err(special::erf(z), want), 1e-12) << z;
    }
}

TEST(ComplexErf, DiagonalArgumentsUsedByTheCorrelationKernel)
{
    for (double s : {0.1, 0.5, 1.0, 2.5, 4.0, 7.5}) {
        const Complex z = std::polar(s, kPi / 4);
        EXPECT_LE(rel_err(special::erf(z), test::erf_by_quadrature(z)), 1e-12) << s;
    }
}

TEST(ComplexErf, MatchesHighPrecisionReferenceTable)
{
    std::ifstream in(NFPLS_TEST_DATA_DIR "/erf_reference.csv");
    ASSERT_TRUE(in) << "missing reference table";
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        double v[4];
        char comma;
        ss >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3];
        const Complex z(v[0], v[1]);
        EXPECT_LE(rel_err(special::erf(z), Complex(v[2], v[3])), 1e-12) << z;
        ++rows;
    }
    EXPECT_GT(rows, 100);
}

TEST(ComplexErf, RejectsNonFiniteInput)
{
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_THROW(special::erf(Complex(inf, 0.0)), DomainError);
    EXPECT_THROW(special::erf(Complex(0.0, std::nan(""))), DomainError);
}

TEST(Quadrature, SingleNode)
{
    const auto rule = special::chebyshev_gauss_nodes(1);
    ASSERT_EQ(rule.order(), 1);
    EXPECT_NEAR(rule.nodes()[0], 0.0, 1e-16);
}

TEST(Quadrature, TwoNodes)
{
    const auto rule = special::chebyshev_gauss_nodes(2);
    EXPECT_NEAR(rule.nodes()[0], std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(rule.nodes()[1], -std::sqrt(0.5), 1e-15);
}

TEST(Quadrature, ConstantIntegratesToPi)
{
    const auto rule = special::chebyshev_gauss_nodes(100);
    EXPECT_NEAR(rule.integrate([](double) { return 1.0; }), kPi, 1e-12);
}

TEST(Quadrature, SquareIntegratesToHalfPi)
{
    for (int t : {2, 3, 10, 100, 257}) {
        const auto rule = special::chebyshev_gauss_nodes(t);
        EXPECT_NEAR(rule.integrate([](double x) { return x * x; }), kPi / 2, 1e-12) << t;
    }
}

TEST(Quadrature, NodesSymmetricAndDecreasing)
{
    for (int t : {1, 2, 7, 100, 401}) {
        const auto rule = special::chebyshev_gauss_nodes(t);
        const auto n = rule.nodes();
        for (int i = 0; i < t; ++i) {
            EXPECT_NEAR(n[std::size_t(i)], -n[std::size_t(t - 1 - i)], 1e-15);
            EXPECT_GT(n[std::size_t(i)], -1.0);
            EXPECT_LT(n[std::size_t(i)], 1.0);
            if (i > 0) EXPECT_LT(n[std::size_t(i)], n[std::size_t(i - 1)]);
        }
    }
}

TEST(Quadrature, RejectsNonPositiveOrder) { EXPECT_THROW(special::chebyshev_gauss_nodes(0), DomainError); }
