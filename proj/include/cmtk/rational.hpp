#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmtk/errors.hpp"

namespace cmtk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// x(x-1)...(x-k+1)
inline BigInt falling_factorial(const BigInt& x, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x - i;
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(const BigInt& n, unsigned k) {
    if (n < 0) throw DomainError("binomial: negative n");
    if (n < k) return 0;
    return falling_factorial(n, k) / factorial(k);
}

// (2m-1)!! = (2m-1)(2m-3)...3*1, the number of perfect matchings of 2m points.
inline BigInt odd_double_factorial(std::uint64_t m) {
    BigInt r = 1;
    for (std::uint64_t i = 3; i <= 2 * m - 1 && m > 0; i += 2) r *= i;
    return r;
}

// (2N-1)(2N-3)...(2N-2k+1), the denominator of configuration pair probabilities.
inline BigInt pairing_denominator(std::uint64_t num_edges, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r *= BigInt(2 * num_edges) - (2 * i - 1);
    return r;
}

}  // namespace cmtk
