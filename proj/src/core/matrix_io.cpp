// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "matrix_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace eb {

namespace {

constexpr char kMagic[4] = {'E', 'B', 'M', 'X'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& os, T value) {
    os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
    T value{};
    is.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!is) throw io_error("matrix stack: truncated file");
    return value;
}

} // namespace

void write_matrix_stack(const std::filesystem::path& path, const std::vector<CMatrix>& stack) {
    if (stack.empty()) throw invalid_parameter_error("write_matrix_stack: empty stack");
    const Eigen::Index rows = stack.front().rows();
    const Eigen::Index cols = stack.front().cols();
    for (const auto& m : stack)
        if (m.rows() != rows || m.cols() != cols)
            throw shape_error("write_matrix_stack: inconsistent matrix dimensions");

    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + path.string());
    os.write(kMagic, sizeof(kMagic));
    put(os, kVersion);
    put(os, static_cast<std::uint64_t>(rows));
    put(os, static_cast<std::uint64_t>(cols));
    put(os, static_cast<std::uint64_t>(stack.size()));
    for (const auto& m : stack)
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) {
                put(os, m(r, c).real());
                put(os, m(r, c).imag());
            }
    if (!os) throw io_error("write failed: " + path.string());
}

std::vector<CMatrix> read_matrix_stack(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open for reading: " + path.string());
    char magic[4];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw io_error("matrix stack: bad magic in " + path.string());
    if (get<std::uint32_t>(is) != kVersion)
        throw io_error("matrix stack: unsupported version in " + path.string());
    const auto rows = static_cast<Eigen::Index>(get<std::uint64_t>(is));
    const auto cols = static_cast<Eigen::Index>(get<std::uint64_t>(is));
    const auto count = get<std::uint64_t>(is);
    if (rows < 1 || cols < 1 || count < 1)
        throw io_error("matrix stack: bad dimensions in " + path.string());

    std::vector<CMatrix> stack;
    stack.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        CMatrix m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) {
                const double re = get<double>(is);
                const double im = get<double>(is);
                m(r, c) = cplx(re, im);
            }
        stack.push_back(std::move(m));
    }
    return stack;
}

std::string matrix_stack_to_csv(const std::vector<CMatrix>& stack) {
    std::ostringstream os;
    os.precision(17);
    os << "k,row,col,real,imag\n";
    for (std::size_t k = 0; k < stack.size(); ++k)
        for (Eigen::Index r = 0; r < stack[k].rows(); ++r)
            for (Eigen::Index c = 0; c < stack[k].cols(); ++c)
                os << (k + 1) << ',' << r << ',' << c << ',' << stack[k](r, c).real() << ','
                   << stack[k](r, c).imag() << '\n';
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + path.string());
    os << contents;
    if (!os) throw io_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open for reading: " + path.string());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace eb
