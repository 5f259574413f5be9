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

#ifndef NFPLS_SELFTEST_HPP
#define NFPLS_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>

namespace nfpls {

// Quick oracle-agreement suite on small random arrays. Prints one line per check; returns 0 when all pass.
int run_selftest(std::ostream& out, std::uint64_t seed = 20260101, int instances = 200);

} // namespace nfpls

#endif
