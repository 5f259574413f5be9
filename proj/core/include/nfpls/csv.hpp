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

#ifndef NFPLS_CSV_HPP
#define NFPLS_CSV_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace nfpls::sweep {

// A cell is either a number or a literal token such as "skipped".
using Cell = std::variant<double, std::string>;

// "%.12e"; non-finite values render as inf, -inf and nan.
std::string format_number(double value);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    const std::vector<std::string>& header() const noexcept { return header_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    std::size_t columns() const noexcept { return header_.size(); }

    // Throws std::invalid_argument when the width does not match the header.
    void add_row(std::vector<Cell> row);

    void write(std::ostream& out) const;
    std::string str() const;
    void save(const std::string& path) const;

    // Reads back a table written by write(); numeric tokens become doubles.
    static CsvTable parse(std::istream& in);

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace nfpls::sweep

#endif
