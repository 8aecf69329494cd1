#pragma once

#include <string>

#include <gmpxx.h>

namespace ctmac
{

using BigInt = mpz_class;
using BigRat = mpq_class;

inline std::string to_string(const BigInt &x)
{
    return x.get_str();
}

inline std::string to_string(const BigRat &x)
{
    return x.get_str();
}

inline bool is_integral(const BigRat &x)
{
    return x.get_den() == 1;
}

} // namespace ctmac
