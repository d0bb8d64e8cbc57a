#ifndef TCC_ERRORS_HPP
#define TCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tcc {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad caller input: out-of-range vertex, self-loop, invalid parameter.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Operation mathematically undefined for this input (e.g. sigma of a
// graph with an isolated vertex).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Result would exceed a configured size budget.
struct CapacityError : Error {
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// Malformed text input; carries the 1-based line number.
struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t line_no)
        : InputError(msg + " (line " + std::to_string(line_no) + ")"),
          line(line_no) {}
    std::size_t line;
};

}  // namespace tcc

#endif
