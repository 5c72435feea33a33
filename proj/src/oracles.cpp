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

#include "qfres/oracles.hpp"

#include "qfres/errors.hpp"

#include <bit>
#include <string>
#include <vector>

namespace qfres::oracles {
namespace {

// Row-major offsets with axis 0 fastest.
std::size_t flat(const std::vector<std::size_t> &coord, std::size_t extent) {
    std::size_t offset = 0;
    for (std::size_t i = coord.size(); i-- > 0;) {
        offset = offset * extent + coord[i];
    }
    return offset;
}

bool advance(std::vector<std::size_t> &coord, std::size_t extent) {
    for (auto &c : coord) {
        if (++c < extent) {
            return true;
        }
        c = 0;
    }
    return false;
}

std::vector<double> scaled_rates(const Signal &signal, double factor) {
    std::vector<double> rates(signal.rates().begin(), signal.rates().end());
    for (auto &r : rates) {
        r *= factor;
    }
    return rates;
}

std::vector<double> block_sums(const Signal &signal, std::size_t side) {
    const std::size_t d = signal.dims();
    const std::size_t in_extent = signal.extent();
    const std::size_t out_extent = in_extent / side;
    std::vector<std::size_t> out_coord(d, 0);
    std::vector<std::size_t> in_coord(d);
    std::vector<std::size_t> inner(d);
    std::vector<double> out;
    do {
        double sum = 0.0;
        std::fill(inner.begin(), inner.end(), 0);
        do {
            for (std::size_t i = 0; i < d; ++i) {
                in_coord[i] = side * out_coord[i] + inner[i];
            }
            sum += signal[flat(in_coord, in_extent)];
        } while (advance(inner, side));
        out.push_back(sum);
    } while (advance(out_coord, out_extent));
    return out;
}

} // namespace

Signal block_average(const Signal &signal, int ntilde) {
    if (ntilde <= 0 || ntilde >= signal.qubits_per_axis()) {
        throw ArgumentError("block average needs 0 < ntilde < n0, got " +
                            std::to_string(ntilde));
    }
    const std::size_t side = std::size_t{1} << ntilde;
    auto values = block_sums(signal, side);
    double block_size = 1.0;
    for (int i = 0; i < signal.dims(); ++i) {
        block_size *= static_cast<double>(side);
    }
    for (auto &v : values) {
        v /= block_size;
    }
    return Signal(signal.dims(), std::move(values),
                  scaled_rates(signal, 1.0 / static_cast<double>(side)));
}

Signal nn_interpolate(const Signal &signal, int ntilde) {
    if (ntilde < 1) {
        throw ArgumentError("nearest-neighbour interpolation needs ntilde >= 1");
    }
    const std::size_t d = signal.dims();
    const std::size_t factor = std::size_t{1} << ntilde;
    const std::size_t in_extent = signal.extent();
    const std::size_t out_extent = in_extent * factor;
    std::vector<std::size_t> out_coord(d, 0);
    std::vector<std::size_t> in_coord(d);
    std::vector<double> out;
    do {
        for (std::size_t i = 0; i < d; ++i) {
            in_coord[i] = out_coord[i] / factor;
        }
        out.push_back(signal[flat(in_coord, in_extent)]);
    } while (advance(out_coord, out_extent));
    return Signal(signal.dims(), std::move(out),
                  scaled_rates(signal, static_cast<double>(factor)),
                  signal.levels());
}

Signal strided_rect_convolution(const Signal &signal, std::size_t kernel_side,
                                std::size_t stride) {
    if (stride != kernel_side) {
        throw ArgumentError("only stride == kernel side is supported");
    }
    if (!std::has_single_bit(kernel_side) || kernel_side < 2 ||
        kernel_side > signal.extent()) {
        throw ArgumentError("kernel side must be a power of two in [2, N0]");
    }
    return Signal(signal.dims(), block_sums(signal, kernel_side),
                  scaled_rates(signal, 1.0 / static_cast<double>(stride)));
}

} // namespace qfres::oracles
