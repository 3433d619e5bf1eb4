#pragma once

#include "pinwheel_forge/zlin.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using pwf::zlin::Int;
using pwf::zlin::IntMatrix;

// Fixed seeds keep every property run reproducible.
inline std::mt19937_64& rng() {
    static std::mt19937_64 r(0x5eed2024ULL);
    return r;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline bool coin() { return uniform(0, 1) == 1; }

inline IntMatrix random_matrix(std::size_t r, std::size_t c, long lo, long hi) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
}

// Product of random elementary operations, so det = +-1 by construction.
inline IntMatrix random_unimodular(std::size_t n, int steps = 12) {
    IntMatrix p = IntMatrix::identity(n);
    if (n < 2) {
        if (coin()) p.negate_row(0);
        return p;
    }
    for (int s = 0; s < steps; ++s) {
        auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        switch (uniform(0, 2)) {
            case 0: p.add_row(i, j, Int(uniform(-2, 2))); break;
            case 1: p.swap_rows(i, j); break;
            default: p.negate_row(i); break;
        }
    }
    return p;
}

}  // namespace testsupport
