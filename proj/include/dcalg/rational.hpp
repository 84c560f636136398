#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dcalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// n(n-1)...(n-k+1), exact; zero when k > n >= 0.
inline Int falling(long n, long k) {
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline Int pow_int(Int base, long e) {
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

inline std::string num_str(const Rational& q) { return boost::multiprecision::numerator(q).str(); }
inline std::string den_str(const Rational& q) { return boost::multiprecision::denominator(q).str(); }

// "a/b" with the "/b" omitted for integers.
inline std::string rational_str(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return num_str(q);
    return num_str(q) + "/" + den_str(q);
}

}  // namespace dcalg
