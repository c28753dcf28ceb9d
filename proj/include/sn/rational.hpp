#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Falling factorial n(n-1)...(n-r+1).
inline Int falling_factorial(int n, int r) {
    Int v = 1;
    for (int i = 0; i < r; ++i) v *= (n - i);
    return v;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int v = 1;
    for (int i = 0; i < k; ++i) {
        v *= (n - i);
        v /= (i + 1);
    }
    return v;
}

inline long long factorial_ll(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r; // valid for n <= 20
}

/// Nearest integer to a non-negative rational, rounding up at half-integers.
inline Int round_half_up(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    return (2 * num + den) / (2 * den); // floor(x + 1/2)
}

inline std::string to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace sn
