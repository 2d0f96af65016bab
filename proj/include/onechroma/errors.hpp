#pragma once

#include <stdexcept>
#include <string>

namespace onechroma {

// Base class for all toolkit errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments or violated call preconditions (CLI exit code 3).
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

// Malformed input file; carries a 1-based line number.
struct parse_error : input_error {
    parse_error(int line_no, const std::string& msg)
        : input_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// Instance construction gave up after the bounded attempt count (CLI exit code 2).
struct generation_error : error {
    explicit generation_error(const std::string& msg) : error(msg) {}
};

} // namespace onechroma
