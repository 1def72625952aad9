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
// Information-energy capacity of discrete noiseless channels. Each input
// symbol delivers a fixed energy; the capacity under a minimum-energy
// constraint b is the maximum input entropy subject to expected energy
// >= b. For the binary alphabet {0, 1} this reduces to the closed form
// 1 bit for b <= 1/2 and H2(b) above it.

#ifndef WIPT_CAPACITY_HPP
#define WIPT_CAPACITY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"
#include "numerics.hpp"

namespace wipt
{
    // Per-symbol energy values (epcu) of a noiseless discrete channel.
    struct EnergyAlphabet
    {
        std::vector<double> symbol_energies;
    };

    inline void validate(const EnergyAlphabet &a)
    {
        if (a.symbol_energies.size() < 2)
            throw domain_error("EnergyAlphabet: need at least two symbols");
        double lo = a.symbol_energies.front();
        double hi = lo;
        for (double e : a.symbol_energies)
        {
            if (!(e >= 0.0) || !std::isfinite(e))
                throw domain_error("EnergyAlphabet: energies must be finite and nonnegative");
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        if (!(hi > lo))
            throw domain_error("EnergyAlphabet: needs at least two distinct energy values");
    }

    // One point of the capacity-vs-energy boundary: the requested minimum
    // energy rate b, the capacity in bits, and the achieving distribution.
    struct CapacityPoint
    {
        double b = 0.0;
        double capacity = 0.0;
        std::vector<double> distribution;
    };

    // Closed-form capacity of the binary noiseless channel where symbol 1
    // carries one energy unit: 1 bit while the uniform input is feasible
    // (b <= 1/2), H2(b) on the binding branch, zero at b = 1.
    inline CapacityPoint binary_capacity(double b)
    {
        if (!(b >= 0.0 && b <= 1.0))
            throw infeasible_energy_error("binary_capacity: b must lie in [0, 1]");
        CapacityPoint pt;
        pt.b = b;
        if (b <= 0.5)
        {
            pt.capacity = 1.0;
            pt.distribution = {0.5, 0.5};
        }
        else
        {
            pt.capacity = binary_entropy(b);
            pt.distribution = {1.0 - b, b};
        }
        return pt;
    }

    // Maximum-entropy distribution over an arbitrary energy alphabet subject
    // to expected energy >= b. Uniform when feasible; otherwise the Gibbs
    // tilt p_i proportional to exp(beta * e_i) with beta > 0 chosen so the
    // constraint binds.
    inline CapacityPoint max_entropy_capacity(const EnergyAlphabet &alphabet, double b)
    {
        validate(alphabet);
        const std::vector<double> &e = alphabet.symbol_energies;
        const std::size_t k = e.size();
        const double e_min = *std::min_element(e.begin(), e.end());
        const double e_max = *std::max_element(e.begin(), e.end());

        if (b > e_max)
            throw infeasible_energy_error(
                "max_entropy_capacity: required energy exceeds the maximum symbol energy");

        CapacityPoint pt;
        pt.b = b;

        // Below the minimum energy the constraint can never bind; clamp to
        // the unconstrained uniform optimum.
        double uniform_energy = 0.0;
        for (double ei : e)
            uniform_energy += ei;
        uniform_energy /= static_cast<double>(k);
        if (b <= uniform_energy || b <= e_min)
        {
            pt.capacity = std::log2(static_cast<double>(k));
            pt.distribution.assign(k, 1.0 / static_cast<double>(k));
            return pt;
        }

        if (b == e_max)
        {
            // Forced point mass on the maximum-energy symbols (uniform over
            // ties); entropy is log2 of the tie count.
            std::size_t ties = 0;
            for (double ei : e)
                if (ei == e_max)
                    ++ties;
            pt.distribution.assign(k, 0.0);
            for (std::size_t i = 0; i < k; ++i)
                if (e[i] == e_max)
                    pt.distribution[i] = 1.0 / static_cast<double>(ties);
            pt.capacity = std::log2(static_cast<double>(ties));
            return pt;
        }

        // Mean energy of the Gibbs tilt, computed with the weights shifted
        // by e_max so every exponent is <= 0.
        std::vector<double> w(k);
        auto gibbs_energy = [&](double beta)
        {
            double z = 0.0;
            double num = 0.0;
            for (std::size_t i = 0; i < k; ++i)
            {
                w[i] = std::exp(beta * (e[i] - e_max));
                z += w[i];
                num += w[i] * e[i];
            }
            return num / z;
        };

        // Mean energy is strictly increasing in beta, so a geometrically
        // grown bracket always captures the unique root in the interior.
        double lo = 0.0;
        double hi = 1.0;
        int grow = 0;
        while (gibbs_energy(hi) < b)
        {
            lo = hi;
            hi *= 2.0;
            if (++grow > 200)
                throw convergence_error("max_entropy_capacity: bracket growth failed",
                                        b - gibbs_energy(lo), grow);
        }
        double beta = find_root([&](double t) { return gibbs_energy(t) - b; }, lo, hi,
                                RootOptions{1e-15, 1e-13, 300}, "max_entropy_capacity");

        double z = 0.0;
        for (std::size_t i = 0; i < k; ++i)
        {
            w[i] = std::exp(beta * (e[i] - e_max));
            z += w[i];
        }
        pt.distribution.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            pt.distribution[i] = w[i] / z;
        pt.capacity = entropy_bits(pt.distribution);
        return pt;
    }

    // Boundary of the information-energy capacity region: one point per
    // grid value of the minimum energy rate.
    inline std::vector<CapacityPoint> region_boundary(const EnergyAlphabet &alphabet,
                                                      std::span<const double> b_grid)
    {
        validate(alphabet);
        std::vector<CapacityPoint> curve;
        curve.reserve(b_grid.size());
        double prev = -std::numeric_limits<double>::infinity();
        for (double b : b_grid)
        {
            if (b < prev)
                throw domain_error("region_boundary: b_grid must be sorted ascending");
            prev = b;
            curve.push_back(max_entropy_capacity(alphabet, b));
        }
        return curve;
    }

} // namespace wipt

#endif
