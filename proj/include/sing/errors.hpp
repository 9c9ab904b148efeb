#pragma once

#include <stdexcept>
#include <string>

namespace sing {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroDivisor : std::invalid_argument {
    explicit ZeroDivisor(const std::string& what) : std::invalid_argument(what) {}
};

struct NotIsolated : std::runtime_error {
    explicit NotIsolated(const std::string& what) : std::runtime_error(what) {}
};

struct NotIsolatedGlobally : std::runtime_error {
    explicit NotIsolatedGlobally(const std::string& what) : std::runtime_error(what) {}
};

struct NotFiniteLength : std::runtime_error {
    explicit NotFiniteLength(const std::string& what) : std::runtime_error(what) {}
};

struct PowerCapExceeded : std::runtime_error {
    explicit PowerCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NonHomogeneousInput : std::invalid_argument {
    explicit NonHomogeneousInput(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal guarantee fails (a bug, never expected on valid input).
struct EngineError : std::logic_error {
    explicit EngineError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sing
