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
#include "nfpls/linalg.hpp"
#include "nfpls/secrecy.hpp"
#include "nfpls/stats.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nfpls;
using namespace nfpls::secrecy;
using channel::build_channel;
using channel::ChannelModel;
using channel::Complex;
using stats::LinkStats;
using test::kPi;
using geometry::NodeGeometry;

namespace {

LinkStats make_stats(double gb, double ge, double rho) { return {gb, ge, rho, ChannelModel::nusw, {}}; }

double log2p(double x) { return std::log2(1.0 + x); }

} // namespace

TEST(ClosedCapacity, UncorrelatedEveIsIrrelevant)
{
    const auto budget = LinkBudget::from_snr(1e4, 0.1);
    const auto out = secrecy_capacity_closed(make_stats(2e-3, 5e-3, 0.0), budget);
    EXPECT_NEAR(out.capacity, log2p(1e4 * 2e-3), 1e-13);
    EXPECT_EQ(out.method, Method::closed_form);
}

TEST(ClosedCapacity, FullyCorrelatedWeakerBobGetsNothing)
{
    const auto budget = LinkBudget::from_snr(1e4, 0.1);
    EXPECT_EQ(secrecy_capacity_closed(make_stats(2e-3, 5e-3, 1.0), budget).capacity, 0.0);
    EXPECT_EQ(secrecy_capacity_closed(make_stats(2e-3, 2e-3, 1.0), budget).capacity, 0.0);
}

TEST(ClosedCapacity, FullyCorrelatedStrongerBobGetsRatio)
{
    const auto budget = LinkBudget(3.0, 0.1, 0.4);
    const double gb = 4e-3, ge = 1e-3;
    EXPECT_NEAR(secrecy_capacity_closed(make_stats(gb, ge, 1.0), budget).capacity,
                std::log2((1 + 30 * gb) / (1 + 7.5 * ge)), 1e-13);
}

TEST(ClosedCapacity, StrictlyDecreasingInCorrelation)
{
    const auto budget = LinkBudget::from_snr(1e4, 0.1);
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 1000; ++i) {
        const double c = secrecy_capacity_closed(make_stats(2e-3, 1e-3, i / 1000.0), budget).capacity;
        if (i < 1000) EXPECT_LT(c, prev);
        prev = c;
    }
}

TEST(ClosedCapacity, ZeroExactlyOnTheSecrecyBoundary)
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double gb = std::pow(10.0, -4 + 3 * u(rng)), ge = std::pow(10.0, -4 + 3 * u(rng));
        const double rho = u(rng) < 0.5 ? 1.0 : u(rng);
        const auto budget = LinkBudget(std::pow(10.0, 4 * u(rng)), 0.1, std::pow(10.0, -2 + 2 * u(rng)));
        const double c = secrecy_capacity_closed(make_stats(gb, ge, rho), budget).capacity;
        const bool zero = rho == 1.0 && budget.snr_bob() * gb <= budget.snr_eve() * ge;
        if (zero) EXPECT_EQ(c, 0.0);
        else EXPECT_GT(c, 0.0);
    }
}

TEST(ClosedCapacity, RejectsInvalidStatistics)
{
    const auto budget = LinkBudget::from_snr(1e4, 0.1);
    EXPECT_THROW(secrecy_capacity_closed(make_stats(1e-3, 1e-3, 1.5), budget), DomainError);
    EXPECT_THROW(secrecy_capacity_closed(make_stats(0.0, 1e-3, 0.5), budget), DomainError);
    EXPECT_THROW(LinkBudget(-1.0, 0.1, 0.1), DomainError);
}

TEST(EigenOracle, AgreesWithClosedFormOnRandomSevenBySeven)
{
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 1.0), a(0.2, kPi - 0.2);
    const auto arr = test::baseline_array(7, 7);
    for (int i = 0; i < 90; ++i) {
        const auto model = channel::kAllModels[i % 3];
        const auto hb = build_channel(model, arr, NodeGeometry(2 + 40 * u(rng), a(rng), a(rng)));
        const auto he = build_channel(model, arr, NodeGeometry(2 + 40 * u(rng), a(rng), a(rng)));
        const auto budget = LinkBudget::from_snr(std::pow(10.0, 6 * u(rng)), 0.1);
        const double closed = secrecy_capacity_closed(stats::rho_direct(hb, he), budget).capacity;
        for (auto route : {OracleRoute::span, OracleRoute::dense}) {
            const auto o = capacity_eigen_oracle(hb, he, budget, route);
            EXPECT_LE(std::abs(o.capacity - closed), std::max(1e-9 * closed, 1e-12));
            EXPECT_EQ(o.method, Method::eigen_oracle);
            ASSERT_TRUE(o.beamformer.has_value());
            EXPECT_NEAR(linalg::norm_squared(*o.beamformer), budget.power(), 1e-12 * budget.power());
            if (o.capacity > 0.0)
                EXPECT_NEAR(achieved_rate(hb.entries(), he.entries(), *o.beamformer, budget), o.capacity,
                            1e-9 * std::max(1.0, o.capacity));
        }
    }
}

TEST(EigenOracle, OrthogonalEveReducesToMrt)
{
    std::vector<Complex> b(9, 0.0), e(9, 0.0);
    b[0] = 0.03;
    b[1] = {0.0, 0.02};
    e[5] = 0.05;
    const channel::ChannelVector hb(ChannelModel::upw, 3, 3, b), he(ChannelModel::upw, 3, 3, e);
    const auto budget = LinkBudget::from_snr(1e4, 0.1);
    const double want = log2p(budget.snr_bob() * hb.norm_squared());
    EXPECT_NEAR(capacity_eigen_oracle(hb, he, budget, OracleRoute::dense).capacity, want, 1e-12);
    const auto w = mrt_beamformer(hb.entries(), budget.power());
    EXPECT_NEAR(achieved_rate(hb.entries(), he.entries(), w, budget), want, 1e-12);
}

TEST(EigenOracle, SizeLimits)
{
    const auto arr = test::baseline_array(21, 21);
    const auto hb = build_channel(ChannelModel::upw, arr, test::baseline_bob());
    const auto he = build_channel(ChannelModel::upw, arr, NodeGeometry(20.0, 1.0, 1.0));
    EXPECT_THROW(capacity_eigen_oracle(hb, he, LinkBudget::from_snr(10.0, 0.1), OracleRoute::dense),
                 PreconditionError);
    EXPECT_NO_THROW(capacity_eigen_oracle(hb, he, LinkBudget::from_snr(10.0, 0.1), OracleRoute::span));
}

TEST(EigenOracle, NoSpanVectorBeatsTheOptimum)
{
    const auto arr = test::baseline_array(5, 5);
    const auto hb = build_channel(ChannelModel::nusw, arr, NodeGeometry(3.0, 1.2, 1.7));
    const auto he = build_channel(ChannelModel::nusw, arr, NodeGeometry(5.0, 1.25, 1.6));
    const auto budget = LinkBudget::from_snr(1e5, 0.1);
    const double c = capacity_eigen_oracle(hb, he, budget, OracleRoute::dense).capacity;
    // Orthonormal basis of span{h_b, h_e}, built here independently.
    const auto n = hb.size();
    std::vector<Complex> q1(n), q2(n);
    const double nb = std::sqrt(hb.norm_squared());
    for (std::size_t i = 0; i < n; ++i) q1[i] = hb[i] / nb;
    Complex proj = 0.0;
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(q1[i]) * he[i];
    double n2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) n2 += std::norm(q2[i] = he[i] - proj * q1[i]);
    for (auto& v : q2) v /= std::sqrt(n2);
    double best = -1e300;
    for (int ia = 0; ia <= 200; ++ia)
        for (int ib = 0; ib < 200; ++ib) {
            const double al = kPi / 2 * ia / 200, be = 2 * kPi * ib / 200;
            std::vector<Complex> w(n);
            for (std::size_t i = 0; i < n; ++i)
                w[i] = std::sqrt(budget.power()) * (std::cos(al) * q1[i] + std::polar(std::sin(al), be) * q2[i]);
            const double r = achieved_rate(hb.entries(), he.entries(), w, budget);
            EXPECT_LE(r, c + 1e-9);
            best = std::max(best, r);
        }
    EXPECT_GT(best, c - 0.05);  // the grid comes close to the optimum
}

TEST(EigenOracle, InvariantUnderJointScaling)
{
    const auto arr = test::baseline_array(5, 7);
    const auto hb = build_channel(ChannelModel::usw, arr, NodeGeometry(3.0, 1.2, 1.7));
    const auto he = build_channel(ChannelModel::usw, arr, NodeGeometry(5.0, 1.4, 1.6));
    const LinkBudget budget(2.0, 0.1, 0.3);
    const double c = capacity_eigen_oracle(hb, he, budget).capacity;
    const double s = 7.5;
    const auto scale = [&](const channel::ChannelVector& h) {
        std::vector<Complex> v(h.entries().begin(), h.entries().end());
        for (auto& x : v) x *= Complex(0.0, s);
        return channel::ChannelVector(h.model(), h.m_x(), h.m_z(), v);
    };
    const LinkBudget scaled(2.0, 0.1 * s * s, 0.3 * s * s);
    EXPECT_NEAR(capacity_eigen_oracle(scale(hb), scale(he), scaled).capacity, c, 1e-12 * c);
    EXPECT_NEAR(secrecy_capacity_closed(stats::rho_direct(scale(hb), scale(he)), scaled).capacity, c, 1e-12 * c);
}

TEST(Mrt, NormAndBobSnr)
{
    const auto h = build_channel(ChannelModel::nusw, test::baseline_array(5, 5), test::baseline_bob());
    const auto w = mrt_beamformer(h.entries(), 4.0);
    EXPECT_NEAR(linalg::norm_squared(w), 4.0, 1e-14);
    EXPECT_NEAR(std::norm(linalg::inner(h.entries(), w)) / 0.1, 40.0 * h.norm_squared(), 1e-12);
    std::vector<Complex> zero(4, 0.0);
    EXPECT_THROW(mrt_beamformer(zero, 1.0), DomainError);
}

TEST(AsymptoticBeamformer, NullsEveAndReducesToMrt)
{
    const auto arr = test::baseline_array(9, 9);
    const auto hb = build_channel(ChannelModel::nusw, arr, test::baseline_bob());
    const auto he = build_channel(ChannelModel::nusw, arr, test::baseline_eve());
    const auto w = asymptotic_beamformer(hb.entries(), he.entries(), 2.0);
    EXPECT_LE(std::abs(linalg::inner(he.entries(), w)), 1e-10 * std::sqrt(2.0 * he.norm_squared()));
    EXPECT_NEAR(linalg::norm_squared(w), 2.0, 1e-13);

    std::vector<Complex> b(4, 0.0), e(4, 0.0);
    b[0] = 1.0;
    b[1] = 2.0;
    e[3] = 1.0;
    const auto wa = asymptotic_beamformer(b, e, 1.0), wm = mrt_beamformer(b, 1.0);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(wa[i] - wm[i]), 0.0, 1e-15);
    EXPECT_THROW(asymptotic_beamformer(hb.entries(), hb.entries(), 1.0), DegenerateInputError);
}

TEST(AsymptoticBeamformer, NearOptimalAtHighSnr)
{
    const auto arr = test::baseline_array();
    const auto hb = build_channel(ChannelModel::nusw, arr, test::baseline_bob());
    const auto he = build_channel(ChannelModel::nusw, arr, test::baseline_eve());
    const auto budget = LinkBudget::from_snr(1e6, 0.1);
    const double opt = capacity_eigen_oracle(hb, he, budget).capacity;
    const auto w = asymptotic_beamformer(hb.entries(), he.entries(), budget.power());
    EXPECT_NEAR(achieved_rate(hb.entries(), he.entries(), w, budget), opt, 0.01);
}

TEST(Asymptotes, PlaneWavePlateau)
{
    const special::QuadratureRule rule(100);
    const auto a = asymptotic_capacity(ChannelModel::upw, Regime::high_snr, test::baseline_array(),
                                       test::baseline_bob(), test::baseline_eve(), LinkBudget::from_snr(1e4, 0.1), rule);
    EXPECT_TRUE(a.bounded);
    EXPECT_NEAR(a.bits, 2.0, 1e-12);
}

TEST(Asymptotes, NuswLargeArrayBound)
{
    const special::QuadratureRule rule(100);
    const auto a = asymptotic_capacity(ChannelModel::nusw, Regime::large_m, test::baseline_array(),
                                       test::baseline_bob(), NodeGeometry(10.0, 2 * kPi / 3, kPi / 3),
                                       LinkBudget::from_snr(1e4, 0.1), rule);
    EXPECT_TRUE(a.bounded);
    EXPECT_NEAR(a.bits, std::log2(1 + 1e4 / (2 * kPi)), 1e-12);
    EXPECT_NEAR(a.bits, 10.64, 0.005);
    const auto u = asymptotic_capacity(ChannelModel::usw, Regime::large_m, test::baseline_array(),
                                       test::baseline_bob(), NodeGeometry(10.0, 2 * kPi / 3, kPi / 3),
                                       LinkBudget::from_snr(1e4, 0.1), rule);
    EXPECT_FALSE(u.bounded);
}

TEST(Asymptotes, HighSnrSlopes)
{
    const special::QuadratureRule rule(100);
    const auto arr = test::baseline_array();
    for (auto m : channel::kAllModels) {
        const auto s = stats::closed_form_stats(m, arr, test::baseline_bob(), test::baseline_eve(), rule);
        const double c1 = secrecy_capacity_closed(s, LinkBudget::from_snr(1e8, 0.1)).capacity;
        const double c2 = secrecy_capacity_closed(s, LinkBudget::from_snr(2e8, 0.1)).capacity;
        EXPECT_NEAR(c2 - c1, m == ChannelModel::upw ? 0.0 : 1.0, 0.02) << channel::to_string(m);
    }
}
