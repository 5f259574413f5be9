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

#include "nfpls/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <limits>
#include <stdexcept>

namespace nfpls::sweep {

std::string format_number(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", value);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header))
{
    if (header_.empty()) throw std::invalid_argument("csv header is empty");
}

void CsvTable::add_row(std::vector<Cell> row)
{
    if (row.size() != header_.size())
        throw std::invalid_argument("csv row has " + std::to_string(row.size()) + " cells, header has " +
                                    std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& out) const
{
    for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (const auto* v = std::get_if<double>(&row[i])) out << format_number(*v);
            else out << std::get<std::string>(row[i]);
        }
        out << '\n';
    }
}

std::string CsvTable::str() const
{
    std::ostringstream o;
    write(o);
    return o.str();
}

void CsvTable::save(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    write(out);
    if (!out) throw std::runtime_error("write failed for " + path);
}

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

Cell to_cell(const std::string& token)
{
    if (token == "inf") return std::numeric_limits<double>::infinity();
    if (token == "-inf") return -std::numeric_limits<double>::infinity();
    if (token == "nan") return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (!token.empty() && end == token.c_str() + token.size()) return v;
    return token;
}

} // namespace

CsvTable CsvTable::parse(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv input is empty");
    CsvTable t(split(line));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Cell> row;
        for (const auto& tok : split(line)) row.push_back(to_cell(tok));
        t.add_row(std::move(row));
    }
    return t;
}

} // namespace nfpls::sweep
