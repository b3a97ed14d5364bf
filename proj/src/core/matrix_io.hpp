// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_MATRIX_IO_HPP
#define EB_CORE_MATRIX_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "types.hpp"

namespace eb {

// Binary container for a stack of equally sized complex matrices.
// Layout: magic "EBMX", u32 version, u64 rows, u64 cols, u64 count, then
// count * rows * cols little-endian doubles interleaved (re, im), row-major.
// Round-trip is bit-exact.
void write_matrix_stack(const std::filesystem::path& path, const std::vector<CMatrix>& stack);
std::vector<CMatrix> read_matrix_stack(const std::filesystem::path& path);

// CSV form: header "k,row,col,real,imag", one entry per line.
std::string matrix_stack_to_csv(const std::vector<CMatrix>& stack);

void write_text_file(const std::filesystem::path& path, const std::string& contents);
std::string read_text_file(const std::filesystem::path& path);

} // namespace eb

#endif
