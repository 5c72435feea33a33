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

#include "qfres/histogram.hpp"

#include "qfres/errors.hpp"

namespace qfres {

std::vector<double> ShotHistogram::frequencies() const {
    std::vector<double> f(counts.size(), 0.0);
    if (shots == 0) {
        return f;
    }
    const double m = static_cast<double>(shots);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        f[i] = static_cast<double>(counts[i]) / m;
    }
    return f;
}

ShotHistogram merge(const ShotHistogram &a, const ShotHistogram &b) {
    if (!(a.layout == b.layout) || a.counts.size() != b.counts.size()) {
        throw ArgumentError("cannot merge histograms of different registers");
    }
    ShotHistogram out = a;
    for (std::size_t i = 0; i < out.counts.size(); ++i) {
        out.counts[i] += b.counts[i];
    }
    out.shots += b.shots;
    return out;
}

} // namespace qfres
