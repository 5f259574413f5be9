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

#include "nfpls/channel.hpp"
#include "nfpls/error.hpp"
#include "nfpls/stats.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nfpls;
using namespace nfpls::stats;
using channel::build_channel;
using channel::ChannelModel;
using special::QuadratureRule;
using test::kPi;

namespace {

double direct_rho(ChannelModel m, const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e)
{
    return rho_direct(build_channel(m, arr, b), build_channel(m, arr, e)).correlation;
}

const QuadratureRule& rule100()
{
    static const QuadratureRule r(100);
    return r;
}

} // namespace

TEST(RhoDirect, IdenticalAndOrthogonal)
{
    const auto arr = test::baseline_array(5, 5);
    const auto h = build_channel(ChannelModel::nusw, arr, test::baseline_bob());
    EXPECT_NEAR(rho_direct(h, h).correlation, 1.0, 1e-15);

    std::vector<channel::Complex> a(9, 0.0), b(9, 0.0);
    a[0] = 1.0;
    b[1] = {0.0, 2.0};
    const channel::ChannelVector ha(ChannelModel::upw, 3, 3, a), hb(ChannelModel::upw, 3, 3, b);
    const auto s = rho_direct(ha, hb);
    EXPECT_EQ(s.correlation, 0.0);
    EXPECT_DOUBLE_EQ(s.gain_bob, 1.0);
    EXPECT_DOUBLE_EQ(s.gain_eve, 4.0);
    EXPECT_EQ(s.provenance, Provenance::direct);
}

TEST(RhoDirect, CoDirectionalPlaneWavesAreFullyCorrelated)
{
    EXPECT_NEAR(direct_rho(ChannelModel::upw, test::baseline_array(), test::baseline_bob(), test::baseline_eve()), 1.0,
                1e-12);
}

TEST(RhoDirect, MismatchedInputsRejected)
{
    const auto arr = test::baseline_array(3, 3);
    const auto hb = build_channel(ChannelModel::upw, arr, test::baseline_bob());
    const auto he = build_channel(ChannelModel::usw, arr, test::baseline_eve());
    const auto hx = build_channel(ChannelModel::upw, test::baseline_array(3, 5), test::baseline_eve());
    EXPECT_THROW(rho_direct(hb, he), PreconditionError);
    EXPECT_THROW(rho_direct(hb, hx), DomainError);
}

TEST(ClampCorrelation, SmallExcursionsClampedNanRejected)
{
    EXPECT_EQ(clamp_correlation(1.0 + 1e-9), 1.0);
    EXPECT_EQ(clamp_correlation(-1e-12), 0.0);
    EXPECT_EQ(clamp_correlation(0.25), 0.25);
    EXPECT_THROW(clamp_correlation(std::nan("")), NumericalError);
}

TEST(GainUniform, SingleElementAndBaseline)
{
    const auto one = test::baseline_array(1, 1);
    const NodeGeometry bore(3.0, kPi / 2, kPi / 2);
    EXPECT_NEAR(gain_uniform(one, bore), one.element_area() / (4 * kPi * 9.0), 1e-18);
    EXPECT_NEAR(gain_uniform(test::baseline_array(), test::baseline_bob()), 1.9302e-3, 5e-8);
    const auto arr = test::baseline_array(9, 3);
    EXPECT_NEAR(gain_uniform(arr, test::baseline_bob()) /
                    build_channel(ChannelModel::upw, arr, test::baseline_bob()).norm_squared(),
                1.0, 1e-13);
}

TEST(RhoUpw, SameDirectionIsOne)
{
    EXPECT_EQ(rho_upw(test::baseline_array(), test::baseline_bob(), test::baseline_eve()), 1.0);
}

TEST(RhoUpw, DirichletNullGivesZero)
{
    const auto arr = test::baseline_array();
    const NodeGeometry b(10.0, kPi / 2, kPi / 2);
    const NodeGeometry e(20.0, kPi / 2, std::acos(-2.0 / 51.0));  // Omega offset puts the z-kernel on its first null
    EXPECT_NEAR(rho_upw(arr, b, e), 0.0, 1e-20);
    EXPECT_NEAR(direct_rho(ChannelModel::upw, arr, b, e), 0.0, 1e-12);
}

TEST(RhoUpw, BaselineCrossedAnglesMatchDirect)
{
    const auto arr = test::baseline_array();
    const NodeGeometry e(20.0, 2 * kPi / 3, kPi / 3);
    EXPECT_NEAR(rho_upw(arr, test::baseline_bob(), e), direct_rho(ChannelModel::upw, arr, test::baseline_bob(), e),
                1e-9);
}

TEST(RhoUpw, RandomGeometriesMatchDirect)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto p = test::random_pair(rng, 25);
        EXPECT_NEAR(rho_upw(p.arr, p.bob, p.eve), direct_rho(ChannelModel::upw, p.arr, p.bob, p.eve), 1e-9);
    }
}

TEST(RhoUpw, LiteralVariantDiffersOffAxis)
{
    const auto arr = test::baseline_array(7, 7);
    const NodeGeometry e(20.0, kPi / 3 + 0.05, 2 * kPi / 3);
    EXPECT_GT(std::abs(rho_upw(arr, test::baseline_bob(), e, FormVariant::literal) -
                       rho_upw(arr, test::baseline_bob(), e)),
              1e-3);
}

TEST(RhoUsw, IdenticalNodesGiveOne)
{
    EXPECT_NEAR(rho_usw(test::baseline_array(), test::baseline_eve(), test::baseline_eve()), 1.0, 1e-14);
}

TEST(RhoUsw, AxisKernelQuadraticOnlyCase)
{
    const double a = 0.013;
    const int m = 51;
    const auto w = std::polar(1.0, kPi / 4);
    const double want = kPi / a * std::norm(special::erf(0.5 * m * std::sqrt(a) * w));
    EXPECT_NEAR(usw_axis_kernel(a, 0.0, m) / want, 1.0, 1e-12);
    EXPECT_NEAR(usw_axis_kernel(-a, 0.0, m) / want, 1.0, 1e-12);
    EXPECT_EQ(usw_axis_kernel(0.0, 0.0, m), double(m) * m);
    EXPECT_EQ(usw_axis_kernel(0.3, 0.2, 1), 1.0);
}

TEST(RhoUsw, CoDirectionalBaselineWithinFivePercent)
{
    const auto arr = test::baseline_array();
    EXPECT_LE(test::relative(rho_usw(arr, test::baseline_bob(), test::baseline_eve()),
                             direct_rho(ChannelModel::usw, arr, test::baseline_bob(), test::baseline_eve())),
              0.05);
}

TEST(RhoUsw, AccurateBeyondFresnelDistance)
{
    const auto arr = test::baseline_array();
    const double rf = geometry::region_boundaries(arr).fresnel;
    for (double rb : {rf, 20.0, 40.0})
        for (double re : {rf * 1.1, 25.0, 60.0, 150.0})
            for (double off : {0.0, 0.004, 0.01}) {
                const NodeGeometry b(rb, kPi / 3, 2 * kPi / 3), e(re, kPi / 3 + off, 2 * kPi / 3 - off);
                const double direct = direct_rho(ChannelModel::usw, arr, b, e);
                if (direct < 1e-3) continue;  // relative error is meaningless near a null
                EXPECT_LE(test::relative(rho_usw(arr, b, e), direct), 0.05) << rb << " " << re << " " << off;
            }
}

TEST(RhoUsw, ConvergesToPlaneWaveFarAway)
{
    const auto arr = test::baseline_array(11, 11);
    const double far = 100.0 * geometry::region_boundaries(arr).rayleigh;
    for (double off : {0.0, 0.01, 0.03}) {
        const NodeGeometry b(far, 1.1, 1.9), e(1.5 * far, 1.1 + off, 1.9 + off / 2);
        const double upw = rho_upw(arr, b, e);
        EXPECT_LE(std::abs(rho_usw(arr, b, e) - upw), 0.01 * upw) << off;
    }
}

TEST(ClosedForms, SymmetricInNodes)
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 60; ++i) {
        auto p = test::random_pair(rng, 15, 5.0, 60.0);
        if (p.arr.m_x() == 1) continue;
        EXPECT_NEAR(rho_upw(p.arr, p.bob, p.eve), rho_upw(p.arr, p.eve, p.bob), 1e-12);
        EXPECT_NEAR(rho_usw(p.arr, p.bob, p.eve), rho_usw(p.arr, p.eve, p.bob), 1e-12);
        EXPECT_NEAR(rho_nusw(p.arr, p.bob, p.eve, rule100()), rho_nusw(p.arr, p.eve, p.bob, rule100()), 1e-9);
    }
}

TEST(GainNusw, LargeArrayLimit)
{
    const auto arr = test::baseline_array(1000001, 1000001);
    const double limit = arr.element_area() / (2 * arr.spacing() * arr.spacing());
    EXPECT_NEAR(limit, 1 / (2 * kPi), 1e-15);
    EXPECT_NEAR(gain_nusw(arr, NodeGeometry(1.0, kPi / 3, 2 * kPi / 3)) / limit, 1.0, 1e-4);
}

TEST(GainNusw, BaselineMatchesDirectSum)
{
    const auto arr = test::baseline_array();
    const auto b = test::baseline_bob();
    EXPECT_LE(test::relative(gain_nusw(arr, b), build_channel(ChannelModel::nusw, arr, b).norm_squared()), 5e-3);
}

TEST(GainNusw, LinearArrayMatchesDirectSum)
{
    const auto arr = test::baseline_array(1, 51);
    for (const NodeGeometry n : {NodeGeometry(10.0, kPi / 2, kPi / 2), NodeGeometry(4.0, kPi / 3, 2 * kPi / 3)})
        EXPECT_LE(test::relative(gain_nusw_ula(arr, n), build_channel(ChannelModel::nusw, arr, n).norm_squared()),
                  5e-3);
    EXPECT_THROW(gain_nusw(arr, test::baseline_bob()), PreconditionError);
    EXPECT_THROW(gain_nusw_ula(test::baseline_array(3, 3), test::baseline_bob()), PreconditionError);
}

TEST(GainNusw, NeverExceedsLimit)
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> a(0.05, kPi - 0.05), lr(-1.0, 2.0);
    std::uniform_int_distribution<int> h(1, 2000);
    for (int i = 0; i < 2000; ++i) {
        const auto arr = test::baseline_array(2 * h(rng) + 1, 2 * h(rng) + 1);
        const double limit = arr.element_area() / (2 * arr.spacing() * arr.spacing());
        EXPECT_LE(gain_nusw(arr, NodeGeometry(std::pow(10.0, lr(rng)), a(rng), a(rng))), limit * (1 + 1e-12));
    }
}

TEST(RhoNusw, IdenticalNodesGiveOne)
{
    EXPECT_NEAR(rho_nusw(test::baseline_array(), test::baseline_bob(), test::baseline_bob(), rule100()), 1.0, 1e-6);
    const auto ula = test::baseline_array(1, 51);
    EXPECT_NEAR(rho_nusw_ula(ula, test::baseline_bob(), test::baseline_bob(), rule100()), 1.0, 1e-6);
}

TEST(RhoNusw, CoDirectionalWithinTwoPercentUpTo101Square)
{
    for (int m : {5, 11, 25, 51, 75, 101}) {
        const auto arr = test::baseline_array(m, m);
        EXPECT_LE(test::relative(rho_nusw(arr, test::baseline_bob(), test::baseline_eve(), rule100()),
                                 direct_rho(ChannelModel::nusw, arr, test::baseline_bob(), test::baseline_eve())),
                  0.02)
            << m;
    }
}

TEST(RhoNusw, LinearArrayCoDirectional)
{
    const auto arr = test::baseline_array(1, 51);
    EXPECT_LE(test::relative(rho_nusw_ula(arr, test::baseline_bob(), test::baseline_eve(), rule100()),
                             direct_rho(ChannelModel::nusw, arr, test::baseline_bob(), test::baseline_eve())),
              0.02);
}

TEST(RhoNusw, QuadratureConverged)
{
    const auto arr = test::baseline_array();
    const double r100 = rho_nusw(arr, test::baseline_bob(), test::baseline_eve(), rule100());
    const double r200 = rho_nusw(arr, test::baseline_bob(), test::baseline_eve(), QuadratureRule(200));
    EXPECT_LE(test::relative(r100, r200), 1e-3);
}

TEST(RhoNusw, PreconditionsAndLiteralVariant)
{
    const auto arr = test::baseline_array(5, 5);
    EXPECT_THROW(rho_nusw(arr, test::baseline_bob(), test::baseline_eve(), QuadratureRule(9)), PreconditionError);
    EXPECT_THROW(rho_nusw(test::baseline_array(1, 5), test::baseline_bob(), test::baseline_eve(), rule100()),
                 PreconditionError);
    // The uncorrected form overshoots badly; it is kept only for comparison.
    const double literal =
        rho_nusw(arr, test::baseline_bob(), test::baseline_eve(), rule100(), FormVariant::literal);
    EXPECT_GT(literal, 1.5);
}

TEST(ClosedFormStats, DispatchesOnModelAndLayout)
{
    const auto b = test::baseline_bob(), e = test::baseline_eve();
    for (auto [mx, mz] : {std::pair{1, 31}, std::pair{15, 15}})
        for (auto m : channel::kAllModels) {
            const auto arr = test::baseline_array(mx, mz);
            const auto s = closed_form_stats(m, arr, b, e, rule100());
            const auto d = rho_direct(build_channel(m, arr, b), build_channel(m, arr, e));
            EXPECT_EQ(s.model, m);
            EXPECT_EQ(s.provenance, Provenance::closed_form);
            EXPECT_LE(test::relative(s.gain_bob, d.gain_bob), 5e-3);
            EXPECT_LE(test::relative(s.gain_eve, d.gain_eve), 5e-3);
            EXPECT_NEAR(s.correlation, d.correlation, 0.05 * d.correlation + 1e-9);
        }
}
