#pragma once

#include <stdexcept>
#include <string>

namespace cg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text; line is 1-based.
struct parse_error : error {
    int line;
    parse_error(int line, const std::string &what)
        : error("line " + std::to_string(line) + ": " + what), line(line) {}
};

/// A precondition documented on the API was violated by the caller.
struct contract_error : error {
    using error::error;
};

/// Input exceeds a hard size limit of an exhaustive routine.
struct limit_error : error {
    using error::error;
};

} // namespace cg
