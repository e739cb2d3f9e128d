#pragma once

#include <string>
#include <vector>

#include "cpav/common.hpp"
#include "cpav/families.hpp"
#include "cpav/polynomial.hpp"
#include "cpav/series.hpp"

namespace cpav {

/// Stirling numbers of the second kind: partitions of an n-set into k blocks.
inline BigInt stirling2(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k == 0) return n == 0 ? 1 : 0;
    std::vector<std::vector<BigInt>> s(static_cast<size_t>(n) + 1, std::vector<BigInt>(static_cast<size_t>(k) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                j * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return s[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

/// Low-order y-slices of U_{1324..p,n}(y), as printed: the y slice is the
/// signed coefficient -1, the y^2 slice is the signed coefficient, and the
/// y^3 slice is the 3-brick fixed-point count (the table coefficient is its
/// negative).
inline BigInt u_slice(int p, int n, int power) {
    if (p < 4) throw invalid_input("u_slice: p must be >= 4");
    if (n < 0) throw invalid_input("u_slice: n must be >= 0");
    switch (power) {
        case 1:
            return n >= 1 ? BigInt(-1) : BigInt(0);
        case 2:
            if (n <= 1) return 0;
            if (n <= p - 1) return n - 1;
            return 2 * n - p;
        case 3:
            if (n <= 2) return 0;
            if (p == 4) {
                if (n <= 4) return binomial(n - 1, 2);
                return BigInt(2) * (n - 3) * (n - 3);
            }
            if (n <= p) return binomial(n - 1, 2);
            if (n <= 2 * p - 3) return binomial(n - 1, 2) + 2 * binomial(n - p + 1, 2);
            return binomial(n - 1, 2) + 2 * binomial(n - p + 1, 2) + binomial(n - 2 * p + 4, 2);
        default:
            throw invalid_input("u_slice: power must be 1, 2 or 3");
    }
}

/// Piecewise rules for the three lowest y-slices of U_{1324..p,n}(y), keyed by p.
struct LowOrderSlices {
    int p;

    explicit LowOrderSlices(int p_) : p(p_) {
        if (p < 4) throw invalid_input("LowOrderSlices: p must be >= 4");
    }

    BigInt slice(int n, int power) const { return u_slice(p, n, power); }
};

/// Number of sigma in S_n with no 1324..p-match and exactly one descent,
/// for n >= p-1. Smaller n falls back to the series slice.
inline BigInt d1(int n, int p) {
    if (p < 4) throw invalid_input("d1: p must be >= 4");
    if (n < 0) throw invalid_input("d1: n must be >= 0");
    if (n >= p - 1) return pow_int(2, n) - 2 * n + p - 2;
    EgfSeries<BigRational> slice = [&] {
        EgfSeries<PolyXY> nm = nm_series(Identity132p(p), n);
        return series_y_slice(series_substitute_x(nm, 1), 2);
    }();
    const BigRational v = slice.at(n);
    if (boost::multiprecision::denominator(v) != 1) throw std::logic_error("d1: non-integral series value");
    return boost::multiprecision::numerator(v);
}

/// Number of sigma in S_n with no 1324..p-match and exactly two descents, by
/// closed form: valid for p = 4 with n >= 5, and p >= 5 with n >= 2p-2.
/// Out of range throws; extract the value from d_series(p, 2, N) instead.
inline BigInt d2(int n, int p) {
    if (p < 4) throw invalid_input("d2: p must be >= 4");
    if (p == 4) {
        if (n < 5)
            throw invalid_input("d2: closed form needs n >= 5 for p = 4; use d_series(4, 2, N) for smaller n");
        return pow_int(3, n) + (BigInt(5) - 2 * n) * pow_int(2, n) + BigInt(n) * n - 11 * n + 5;
    }
    if (n < 2 * p - 2)
        throw invalid_input("d2: closed form needs n >= 2p-2 for p >= 5; use d_series(p, 2, N) for smaller n");
    BigRational val = BigRational(pow_int(3, n)) + BigRational((BigInt(2) * p - 3 - 2 * n) * pow_int(2, n));
    val += 3 * p * p - 12 * p + 10;
    val += BigInt(13 - 6 * p) * n;
    val += BigInt(5 - p) * n * (n - 1);
    for (int k = 3; k <= p - 2; ++k) {
        BigInt falling = 1;
        for (int i = 0; i < k; ++i) falling *= n - i;
        val -= BigRational(BigInt(2) * (p - k - 1) * falling, factorial(k));
    }
    if (boost::multiprecision::denominator(val) != 1) throw std::logic_error("d2: non-integral closed-form value");
    return boost::multiprecision::numerator(val);
}

/// Correction terms of the y^3 slice of U_{1324..p}(t,y) against its
/// exponential part: f(n,p) = slice(n) - [t^n/n!] (2t^2+(5-4p)t+3p^2-8p+7)e^t,
/// defined for p >= 5 and 0 <= n <= 2p-3.
inline BigInt f_table(int n, int p) {
    if (p < 5) throw invalid_input("f_table: p must be >= 5");
    if (n < 0 || n > 2 * p - 3) throw invalid_input("f_table: need 0 <= n <= 2p-3");
    const BigInt exp_part = BigInt(2) * n * (n - 1) + BigInt(5 - 4 * p) * n + 3 * p * p - 8 * p + 7;
    return u_slice(p, n, 3) - exp_part;
}

/// D_p^{(i)}(t): the y^{i+1} slice of NM_{1324..p}(t,1,y), to order N.
inline EgfSeries<BigRational> d_series(int p, int i, int N) {
    if (p < 4) throw invalid_input("d_series: p must be >= 4");
    if (i != 1 && i != 2) throw invalid_input("d_series: i must be 1 or 2");
    EgfSeries<PolyXY> nm = nm_series(Identity132p(p), N);
    return series_y_slice(series_substitute_x(nm, 1), i + 1);
}

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct IdentityReport {
    int p = 0;
    int n = 0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Checks the printed coefficient identities of NM_{1324..p,n}(x,y):
/// [x^k y^k] = S(n,k) for k = 1..n, [x y^2] = 2^{n-1}-n (n < p) or
/// 2^{n-1}-2n+p-1 (n >= p), and [x^{n-1} y^{n-1}] = C(n,2).
inline IdentityReport coeff_identities(int p, int n) {
    if (p < 4) throw invalid_input("coeff_identities: p must be >= 4");
    if (n < 1) throw invalid_input("coeff_identities: n must be >= 1");
    IdentityReport report{p, n, {}};
    const PolyXY c = nm_series(Identity132p(p), n).at(n);

    for (int k = 1; k <= n; ++k) {
        const BigInt want = stirling2(n, k);
        const BigRational got = c.coefficient(k, k);
        IdentityCheck chk;
        chk.name = "[x^" + std::to_string(k) + " y^" + std::to_string(k) + "] = S(" + std::to_string(n) + "," +
                   std::to_string(k) + ")";
        chk.pass = got == BigRational(want);
        chk.detail = "expected " + want.str() + ", got " + format_poly(PolyY(got));
        report.checks.push_back(std::move(chk));
    }
    {
        const BigInt want = n < p ? pow_int(2, n - 1) - n : pow_int(2, n - 1) - 2 * n + p - 1;
        const BigRational got = c.coefficient(1, 2);
        IdentityCheck chk;
        chk.name = std::string("[x y^2] = ") + (n < p ? "2^{n-1}-n" : "2^{n-1}-2n+p-1");
        chk.pass = got == BigRational(want);
        chk.detail = "expected " + want.str() + ", got " + format_poly(PolyY(got));
        report.checks.push_back(std::move(chk));
    }
    if (n >= 2) {
        const BigInt want = binomial(n, 2);
        const BigRational got = c.coefficient(n - 1, n - 1);
        IdentityCheck chk;
        chk.name = "[x^{n-1} y^{n-1}] = C(n,2)";
        chk.pass = got == BigRational(want);
        chk.detail = "expected " + want.str() + ", got " + format_poly(PolyY(got));
        report.checks.push_back(std::move(chk));
    }
    return report;
}

}  // namespace cpav
