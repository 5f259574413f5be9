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

#include <iostream>
#include <mutex>
#include <set>

namespace nfpls::diag {
namespace {

struct State {
    std::mutex mutex;
    std::set<std::string, std::less<>> seen;
    WarningHandler handler;
    std::size_t count = 0;
};

State& state()
{
    static State s;
    return s;
}

} // namespace

void warn(std::string_view message)
{
    auto& s = state();
    std::lock_guard lock(s.mutex);
    ++s.count;
    if (s.seen.find(message) != s.seen.end()) return;
    s.seen.emplace(message);
    if (s.handler)
        s.handler(message);
    else
        std::cerr << "warning: " << message << '\n';
}

WarningHandler set_warning_handler(WarningHandler handler)
{
    auto& s = state();
    std::lock_guard lock(s.mutex);
    auto old = std::move(s.handler);
    s.handler = std::move(handler);
    return old;
}

void reset_warnings()
{
    auto& s = state();
    std::lock_guard lock(s.mutex);
    s.seen.clear();
    s.count = 0;
}

std::size_t warning_count()
{
    auto& s = state();
    std::lock_guard lock(s.mutex);
    return s.count;
}

} // namespace nfpls::diag
