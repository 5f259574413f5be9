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
#include "nfpls/geometry.hpp"
#include "nfpls/secrecy.hpp"
#include "nfpls/special_fn.hpp"
#include "nfpls/stats.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

namespace {

using namespace nfpls;

geometry::ArrayGeometry array(int m)
{
    return geometry::ArrayGeometry::half_wavelength(m, m, 0.125);
}

const geometry::NodeGeometry bob(10.0, std::numbers::pi / 3, 2 * std::numbers::pi / 3);
const geometry::NodeGeometry eve(20.0, std::numbers::pi / 3, 2 * std::numbers::pi / 3);

void BM_Erf(benchmark::State& state)
{
    const double scale = double(state.range(0));
    special::Complex z(0.3 * scale, 0.7 * scale);
    for (auto _ : state) {
        benchmark::DoNotOptimize(special::erf(z));
        z += special::Complex(1e-9, -1e-9);
    }
}
BENCHMARK(BM_Erf)->Arg(1)->Arg(4)->Arg(40);

void BM_BuildChannel(benchmark::State& state)
{
    const auto arr = array(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(channel::build_channel(channel::ChannelModel::nusw, arr, bob));
    state.SetItemsProcessed(state.iterations() * arr.m_total());
}
BENCHMARK(BM_BuildChannel)->Arg(15)->Arg(51)->Arg(201);

void BM_RhoNusw(benchmark::State& state)
{
    const special::QuadratureRule rule(int(state.range(1)));
    const auto arr = array(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(stats::rho_nusw(arr, bob, eve, rule));
}
BENCHMARK(BM_RhoNusw)->Args({51, 100})->Args({1001, 100})->Args({1001, 400});

void BM_RhoUsw(benchmark::State& state)
{
    const auto arr = array(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(stats::rho_usw(arr, bob, eve));
}
BENCHMARK(BM_RhoUsw)->Arg(51)->Arg(1001);

void BM_CapacityOracle(benchmark::State& state)
{
    const auto arr = array(int(state.range(0)));
    const auto hb = channel::build_channel(channel::ChannelModel::nusw, arr, bob);
    const auto he = channel::build_channel(channel::ChannelModel::nusw, arr, eve);
    const auto budget = secrecy::LinkBudget::from_snr(1e4, 0.1);
    const auto route = state.range(1) == 0 ? secrecy::OracleRoute::dense : secrecy::OracleRoute::span;
    for (auto _ : state) benchmark::DoNotOptimize(secrecy::capacity_eigen_oracle(hb, he, budget, route));
}
BENCHMARK(BM_CapacityOracle)->Args({5, 0})->Args({11, 0})->Args({15, 0})->Args({15, 1})->Args({99, 1})
    ->Unit(benchmark::kMicrosecond);

void BM_CapacityClosed(benchmark::State& state)
{
    const special::QuadratureRule rule(100);
    const auto arr = array(int(state.range(0)));
    const auto budget = secrecy::LinkBudget::from_snr(1e4, 0.1);
    for (auto _ : state) {
        const auto s = stats::closed_form_stats(channel::ChannelModel::nusw, arr, bob, eve, rule);
        benchmark::DoNotOptimize(secrecy::secrecy_capacity_closed(s, budget));
    }
}
BENCHMARK(BM_CapacityClosed)->Arg(15)->Arg(1001);

} // namespace

BENCHMARK_MAIN();
