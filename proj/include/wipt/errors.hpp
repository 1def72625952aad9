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

#ifndef WIPT_ERRORS_HPP
#define WIPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wipt
{
    // Argument outside the documented domain of an operation.
    class domain_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Operation is not defined for the given model or configuration variant.
    class unsupported_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Energy-rate constraint that no input distribution can satisfy.
    class infeasible_energy_error : public domain_error
    {
    public:
        using domain_error::domain_error;
    };

    // Iterative solver exhausted its iteration cap; carries the final residual.
    class convergence_error : public std::runtime_error
    {
    public:
        convergence_error(const std::string &msg, double residual, int iterations)
            : std::runtime_error(msg + " (residual " + std::to_string(residual) +
                                 " after " + std::to_string(iterations) + " iterations)"),
              residual_(residual), iterations_(iterations)
        {
        }

        double residual() const { return residual_; }
        int iterations() const { return iterations_; }

    private:
        double residual_;
        int iterations_;
    };

} // namespace wipt

#endif
