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

#include "qfres/io.hpp"

#include "qfres/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace qfres::io {
namespace {

namespace fs = std::filesystem;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split_commas(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

template <class T>
T parse_number(const std::string &text, const fs::path &path, std::size_t line) {
    T value{};
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw IoError(path.string(), "line " + std::to_string(line) +
                                ": cannot parse '" + text + "'");
    }
    return value;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::ofstream open_for_write(const fs::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError(path.string(), "cannot open for writing");
    }
    return out;
}

void finish(std::ofstream &out, const fs::path &path) {
    out.flush();
    if (!out) {
        throw IoError(path.string(), "write failed");
    }
}

std::size_t pow_size(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

// Skips whitespace and '#' comments in a PGM header.
void skip_header_space(std::istream &in) {
    for (int c = in.peek(); c != EOF; c = in.peek()) {
        if (c == '#') {
            std::string ignored;
            std::getline(in, ignored);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

long read_header_int(std::istream &in, const fs::path &path) {
    skip_header_space(in);
    long v = -1;
    if (!(in >> v) || v < 0) {
        throw IoError(path.string(), "malformed PGM header");
    }
    return v;
}

} // namespace

Format format_for(const fs::path &path) {
    const auto ext = lower(path.extension().string());
    if (ext == ".csv") {
        return Format::Csv;
    }
    if (ext == ".pgm") {
        return Format::Pgm;
    }
    throw IoError(path.string(), "unknown signal format (expected .csv or .pgm)");
}

Signal read_csv(const fs::path &path, int dims, std::vector<double> rates,
                std::optional<int> levels) {
    if (dims < 1) {
        throw ArgumentError("dims must be >= 1");
    }
    std::ifstream in(path);
    if (!in) {
        throw IoError(path.string(), "cannot open for reading");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError(path.string(), "empty file");
    }
    const auto header = split_commas(line);
    if (header.size() != static_cast<std::size_t>(dims) + 1 ||
        header.back() != "value") {
        throw IoError(path.string(), "header must have " + std::to_string(dims) +
                                " index columns followed by 'value'");
    }

    struct Row {
        std::vector<std::size_t> index;
        double value;
    };
    std::vector<Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto cells = split_commas(line);
        if (cells.size() != header.size()) {
            throw IoError(path.string(), "line " + std::to_string(line_no) + ": expected " +
                                    std::to_string(header.size()) + " columns");
        }
        Row row{{}, parse_number<double>(cells.back(), path, line_no)};
        for (int i = 0; i < dims; ++i) {
            row.index.push_back(parse_number<std::size_t>(cells[i], path, line_no));
        }
        rows.push_back(std::move(row));
    }

    // Extent from the row count; the Signal constructor checks powers of two.
    std::size_t extent = 1;
    while (pow_size(extent, dims) < rows.size()) {
        ++extent;
    }
    if (rows.empty() || pow_size(extent, dims) != rows.size()) {
        throw IoError(path.string(), std::to_string(rows.size()) +
                                " samples do not form a hyper-cube");
    }
    std::vector<double> values(rows.size(), 0.0);
    std::vector<bool> seen(rows.size(), false);
    for (const auto &row : rows) {
        std::size_t flat = 0;
        for (int i = dims; i-- > 0;) {
            if (row.index[i] >= extent) {
                throw IoError(path.string(), "index out of range");
            }
            flat = flat * extent + row.index[i];
        }
        if (seen[flat]) {
            throw IoError(path.string(), "duplicate sample index");
        }
        seen[flat] = true;
        values[flat] = row.value;
    }
    return Signal(dims, std::move(values), std::move(rates), levels);
}

void write_csv(const fs::path &path, const Signal &signal) {
    auto out = open_for_write(path);
    const int d = signal.dims();
    if (d == 1) {
        out << "index,value\n";
    } else {
        for (int i = 0; i < d; ++i) {
            out << 'i' << i << ',';
        }
        out << "value\n";
    }
    const std::size_t extent = signal.extent();
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t flat = 0; flat < signal.size(); ++flat) {
        std::size_t rest = flat;
        for (int i = 0; i < d; ++i) {
            idx[i] = rest % extent;
            rest /= extent;
        }
        for (int i = 0; i < d; ++i) {
            out << idx[i] << ',';
        }
        out << format_value(signal[flat]) << '\n';
    }
    finish(out, path);
}

Signal read_pgm(const fs::path &path, std::vector<double> rates) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path.string(), "cannot open for reading");
    }
    std::string magic(2, '\0');
    in.read(magic.data(), 2);
    if (!in || (magic != "P2" && magic != "P5")) {
        throw IoError(path.string(), "not a P2/P5 PGM file");
    }
    const long width = read_header_int(in, path);
    const long height = read_header_int(in, path);
    const long maxval = read_header_int(in, path);
    if (width <= 0 || width != height) {
        throw IoError(path.string(), "PGM image must be square");
    }
    if (maxval <= 0 || maxval > 65535) {
        throw IoError(path.string(), "PGM maxval out of range");
    }
    const auto count = static_cast<std::size_t>(width * height);
    std::vector<double> values(count);
    if (magic == "P2") {
        for (auto &v : values) {
            const long px = read_header_int(in, path);
            v = static_cast<double>(px);
        }
    } else {
        in.get(); // single whitespace after maxval
        const std::size_t bytes = maxval < 256 ? 1 : 2;
        std::vector<unsigned char> raw(count * bytes);
        in.read(reinterpret_cast<char *>(raw.data()),
                static_cast<std::streamsize>(raw.size()));
        if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
            throw IoError(path.string(), "truncated PGM raster");
        }
        for (std::size_t i = 0; i < count; ++i) {
            values[i] = bytes == 1 ? raw[i] : raw[2 * i] * 256.0 + raw[2 * i + 1];
        }
    }
    for (const auto v : values) {
        if (v > static_cast<double>(maxval)) {
            throw IoError(path.string(), "pixel exceeds maxval");
        }
    }
    return Signal(2, std::move(values), std::move(rates),
                  static_cast<int>(maxval) + 1);
}

void write_pgm(const fs::path &path, const Signal &signal,
               std::optional<int> levels) {
    if (signal.dims() != 2) {
        throw ArgumentError("PGM output needs a two-dimensional signal");
    }
    double maxval = 255.0;
    if (!levels) {
        levels = signal.levels();
    }
    if (levels) {
        maxval = *levels - 1;
    } else {
        for (const auto v : signal.values()) {
            maxval = std::max(maxval, std::ceil(v));
        }
    }
    auto out = open_for_write(path);
    const std::size_t side = signal.extent();
    out << "P2\n" << side << ' ' << side << '\n'
        << static_cast<long>(maxval) << '\n';
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            const double v = std::clamp(std::round(signal[r * side + c]), 0.0, maxval);
            out << (c ? " " : "") << static_cast<long>(v);
        }
        out << '\n';
    }
    finish(out, path);
}

Signal read_signal(const fs::path &path, int dims, std::vector<double> rates,
                   std::optional<int> levels) {
    if (format_for(path) == Format::Pgm) {
        if (dims != 2) {
            throw ConfigError("PGM input is two-dimensional; got --dims " +
                              std::to_string(dims));
        }
        return read_pgm(path, std::move(rates));
    }
    return read_csv(path, dims, std::move(rates), levels);
}

void write_signal(const fs::path &path, const Signal &signal,
                  std::optional<int> levels) {
    if (format_for(path) == Format::Pgm) {
        write_pgm(path, signal, levels);
    } else {
        write_csv(path, signal);
    }
}

} // namespace qfres::io
