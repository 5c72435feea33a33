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

#include "qfres/register.hpp"

#include "qfres/errors.hpp"

#include <string>

namespace qfres {

RegisterLayout make_layout(int d, int n0, int cap) {
    if (d < 1 || n0 < 1) {
        throw ArgumentError("register layout needs d >= 1 and n0 >= 1 (got d=" +
                            std::to_string(d) + ", n0=" + std::to_string(n0) +
                            ")");
    }
    if (static_cast<long long>(d) * n0 > cap) {
        throw CapacityError("register of " + std::to_string(d) + "x" +
                            std::to_string(n0) + " qubits exceeds the cap of " +
                            std::to_string(cap));
    }
    return RegisterLayout(d, n0);
}

BasisIndex tuple_to_index(const RegisterLayout &layout, const IndexTuple &e) {
    if (e.size() != static_cast<std::size_t>(layout.dims())) {
        throw ArgumentError("index tuple has " + std::to_string(e.size()) +
                            " coordinates, layout has " +
                            std::to_string(layout.dims()) + " axes");
    }
    const auto extent = layout.samples_per_axis();
    BasisIndex index = 0;
    for (int i = layout.dims() - 1; i >= 0; --i) {
        if (e[i] >= extent) {
            throw ArgumentError("coordinate " + std::to_string(e[i]) +
                                " on axis " + std::to_string(i) +
                                " is out of range");
        }
        index = (index << layout.qubits_per_axis()) | e[i];
    }
    return index;
}

IndexTuple index_to_tuple(const RegisterLayout &layout, BasisIndex index) {
    if (index >= layout.size()) {
        throw ArgumentError("basis index " + std::to_string(index) +
                            " is out of range");
    }
    const auto mask = layout.samples_per_axis() - 1;
    IndexTuple e(layout.dims());
    for (auto &coord : e) {
        coord = index & mask;
        index >>= layout.qubits_per_axis();
    }
    return e;
}

int global_position(const RegisterLayout &layout, QubitId qid) {
    if (qid.subregister < 0 || qid.subregister >= layout.dims() ||
        qid.position < 0 || qid.position >= layout.qubits_per_axis()) {
        throw ArgumentError("qubit (" + std::to_string(qid.subregister) + "," +
                            std::to_string(qid.position) +
                            ") is not in the layout");
    }
    return qid.subregister * layout.qubits_per_axis() + qid.position;
}

} // namespace qfres
