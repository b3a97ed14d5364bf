// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_ERRORS_HPP
#define EB_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eb {

class invalid_parameter_error : public std::invalid_argument {
public:
    explicit invalid_parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class shape_error : public std::runtime_error {
public:
    explicit shape_error(const std::string& msg) : std::runtime_error(msg) {}
};

class empty_grid_error : public std::runtime_error {
public:
    explicit empty_grid_error(const std::string& msg) : std::runtime_error(msg) {}
};

class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Config parse failures carry the 1-based line number (0 when not applicable).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line = 0) : std::runtime_error(msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class unknown_key_error : public parse_error {
public:
    unknown_key_error(const std::string& key, int line)
        : parse_error("unknown configuration key: " + key, line), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace eb

#endif
