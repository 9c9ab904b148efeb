#pragma once

#include <cstdint>
#include <string>

#include "sing/errors.hpp"

namespace sing {

/// A vector-space dimension that may be infinite (non-m-primary quotients).
struct Length {
    bool finite = true;
    std::uint64_t value = 0;

    static Length of(std::uint64_t v) { return {true, v}; }
    static Length infinite() { return {false, 0}; }

    bool is_finite() const { return finite; }

    std::uint64_t get() const {
        if (!finite) throw EngineError("attempt to read an INFINITE length");
        return value;
    }

    bool operator==(const Length& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    bool operator==(std::uint64_t v) const { return finite && value == v; }

    std::string to_string() const { return finite ? std::to_string(value) : "INFINITE"; }
};

}  // namespace sing
