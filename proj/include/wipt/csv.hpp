// SPDX-License-Identifier: Apache-2.0
//
// wiptlib - numerical toolkit for wireless information and power transfer
// Copyright (C) 2026 the wiptlib authors
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
//
// Minimal deterministic CSV emission: comma separators, '.' decimal point,
// '#'-prefixed comment lines, and a fixed %.12g number format so identical
// values always serialize to identical bytes.

#ifndef WIPT_CSV_HPP
#define WIPT_CSV_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace wipt
{
    inline std::string csv_num(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return buf;
    }

    inline std::string csv_num(std::size_t v)
    {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%zu", v);
        return buf;
    }

    class CsvWriter
    {
    public:
        explicit CsvWriter(std::ostream &os) : os_(os) {}

        void comment(const std::string &text) { os_ << "# " << text << "\n"; }

        void row(const std::vector<std::string> &fields)
        {
            for (std::size_t i = 0; i < fields.size(); ++i)
            {
                if (i)
                    os_ << ',';
                os_ << fields[i];
            }
            os_ << "\n";
        }

    private:
        std::ostream &os_;
    };

} // namespace wipt

#endif
