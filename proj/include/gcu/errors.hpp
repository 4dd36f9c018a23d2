#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcu {

// Malformed input text. `line` is 1-based, 0 when not tied to a line.
struct ParseError : std::runtime_error {
    std::size_t line = 0;
    ParseError(const std::string& msg, std::size_t line_no = 0)
        : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

// An enumeration or search exceeded its configured bound.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gcu
