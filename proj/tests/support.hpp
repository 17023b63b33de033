#pragma once

// Seeded random inputs shared by the property tests.

#include "hcl/alt_forms.hpp"
#include "hcl/sym_spaces.hpp"

#include <random>

namespace hcl::testing {

inline std::mt19937_64 & rng()
{
    static std::mt19937_64 g(20240611);
    return g;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Cube random_cube(long bound)
{
    Cube A;
    for (auto & x : A.a)
        x = uniform(-bound, bound);
    return A;
}

inline BinaryCubic random_cubic(long bound)
{
    BinaryCubic f;
    for (auto & x : f.a)
        x = uniform(-bound, bound);
    return f;
}

/// A random element of SL2(Z) built from a few elementary moves.
inline IntMatrix random_sl2(int moves = 4, long bound = 3)
{
    IntMatrix g = IntMatrix::identity(2);
    for (int i = 0; i < moves; ++i) {
        long t = uniform(-bound, bound);
        g = g * (uniform(0, 1) ? IntMatrix::mat2(1, t, 0, 1) : IntMatrix::mat2(1, 0, t, 1));
    }
    return g;
}

}  // namespace hcl::testing
