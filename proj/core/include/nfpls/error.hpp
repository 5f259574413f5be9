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

#ifndef NFPLS_ERROR_HPP
#define NFPLS_ERROR_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nfpls {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input is valid in general but violates a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inputs for which the requested quantity is not defined (e.g. parallel channels).
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Closed form requested outside the configuration it was derived for.
class ScopeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Iterative or root-finding routine failed.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

namespace diag {

using WarningHandler = std::function<void(std::string_view)>;

// Emits a numerical-quality warning. Identical messages are reported once per
// process so that a sweep over thousands of points does not flood stderr.
void warn(std::string_view message);

// Replaces the sink (default writes "warning: <msg>" to stderr). Returns the
// previous handler. Passing an empty handler restores the default.
WarningHandler set_warning_handler(WarningHandler handler);

// Forget which messages were already reported.
void reset_warnings();

std::size_t warning_count();

} // namespace diag
} // namespace nfpls

#endif
