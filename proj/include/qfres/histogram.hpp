// Copyright 2026 The qfres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qfres/register.hpp"

#include <cstdint>
#include <vector>

namespace qfres {

/// Measurement counts of M shots on a register.
struct ShotHistogram {
    RegisterLayout layout;
    std::vector<std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    /// counts / M
    [[nodiscard]] std::vector<double> frequencies() const;
};

/// Sum of two histograms over the same layout; the seed of `a` is kept.
ShotHistogram merge(const ShotHistogram &a, const ShotHistogram &b);

} // namespace qfres
