// Exception hierarchy; CLI maps these onto exit codes.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nerfuse {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. line is 1-based, 0 when unknown.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t line_no = 0)
        : error(line_no ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
    std::size_t line;
};

// Violated data contract (missing labeling, overlapping spans, id mismatch, ...).
struct data_error : error {
    using error::error;
};

// Transport or protocol failure talking to an annotation backend.
struct backend_error : error {
    using error::error;
};

// Bad command-line usage.
struct usage_error : error {
    using error::error;
};

}  // namespace nerfuse
