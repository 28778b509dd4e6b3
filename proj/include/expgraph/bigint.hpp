#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace expgraph {

// Exact unbounded integer. All cycle counts and matrix entries use this type;
// no floating point appears anywhere in the counting paths.
using BigInt = boost::multiprecision::cpp_int;

// base^exp over BigInt (exp as machine word; counts and bounds never need more).
inline BigInt bigint_pow(const BigInt& base, uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace expgraph
