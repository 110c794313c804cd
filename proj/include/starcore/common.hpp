#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace starcore {

// Base class for everything the engine throws on purpose.
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations: mismatched rings, bad exponents, malformed input.
// CLI maps these to exit code 2.
class UsageError : public EngineError {
public:
    explicit UsageError(const std::string& what) : EngineError(what) {}
};

// Text input errors with a source position. Also exit code 2.
class ParseError : public UsageError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : UsageError(what + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Raised when a computation exceeds the configured caps instead of hanging.
// CLI maps these to exit code 3.
class ResourceError : public EngineError {
public:
    explicit ResourceError(const std::string& what) : EngineError(what) {}
};

// Caps for the Groebner kernel. max_degree bounds the degree of any
// S-polynomial the kernel is willing to process; max_basis bounds the
// working basis size. Set once at startup (CLI flag / env var); reads are
// uncontended afterwards.
struct GbLimits {
    std::size_t max_basis = 10000;
    std::uint32_t max_degree = 512;
};

inline GbLimits& gb_limits() {
    static GbLimits limits;
    return limits;
}

}  // namespace starcore
