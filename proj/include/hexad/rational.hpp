#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hexad {

/// Arbitrary-precision rational. No floating point is used anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r);
Rat rat_parse(std::string_view text);

}  // namespace hexad
