#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpav {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when an argument violates an operation's contract.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed a configured size bound.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default size bounds; callers may override where an operation takes a bound.
inline constexpr int kDefaultOracleBound = 9;   // exhaustive S_n enumeration
inline constexpr int kDefaultObjectBound = 7;   // filled brick object enumeration
inline constexpr int kDefaultSeriesOrder = 16;  // truncated series order

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of i+1 consecutive integers is divisible by (i+1)!
    }
    return r;
}

inline BigInt multinomial(int n, const std::vector<int>& parts) {
    BigInt r = factorial(n);
    int s = 0;
    for (int p : parts) {
        r /= factorial(p);
        s += p;
    }
    if (s != n) throw invalid_input("multinomial: parts must sum to n");
    return r;
}

inline BigInt catalan(int k) {
    if (k < 0) throw invalid_input("catalan: k must be >= 0");
    return binomial(2LL * k, k) / (k + 1);
}

inline BigInt pow_int(BigInt base, int e) {
    BigInt r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// n! as uint64_t; valid for n <= 20.
inline std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

inline std::string bigint_str(const BigInt& v) { return v.str(); }

}  // namespace cpav
