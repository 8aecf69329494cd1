#pragma once

#include <cstdint>
#include <random>

#include <ctmac/bigrat.hpp>

namespace ctmac
{

// Seeded source of small random rationals.  Draws use the raw engine output
// only, so a seed gives the same values on every platform.
class RationalSampler
{
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    // Integer in [lo, hi].
    long integer(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(rng_() % span);
    }
    // Nonzero p/d with |p| <= max_num, 1 <= d <= max_den.
    BigRat nonzero(long max_num = 9, long max_den = 9)
    {
        long p = integer(1, max_num);
        if (integer(0, 1) == 1) {
            p = -p;
        }
        BigRat r(p, integer(1, max_den));
        r.canonicalize();
        return r;
    }
    // Nonzero and different from +-1, for use as q.
    BigRat generic_q()
    {
        for (;;) {
            BigRat r = nonzero();
            if (abs(r) != 1) {
                return r;
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace ctmac
