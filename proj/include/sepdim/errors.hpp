#pragma once

#include <stdexcept>
#include <string>

namespace sepdim {

// Bad parameters or inputs outside an operation's domain (parity, ranges, ...).
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A stated precondition was violated by the caller (mismatched certificate,
// unsuitable pair family, ...).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input file. `line` is 1-based; 0 when not line-addressable.
struct parse_error : std::runtime_error {
    int line;
    parse_error(const std::string& what, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    explicit parse_error(const std::string& what) : std::runtime_error(what), line(0) {}
};

// A configured resource cap was exhausted (retry caps, vertex caps,
// resampling caps, exhausted search limits).
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; indicates an implementation bug,
// not bad input.
struct verification_error : std::logic_error {
    explicit verification_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sepdim
