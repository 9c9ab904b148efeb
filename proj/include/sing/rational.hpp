#pragma once

#include <gmpxx.h>

#include <string>

namespace sing {

/// Exact rational coefficients. All arithmetic in the library is exact;
/// floating point is never used.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace sing
