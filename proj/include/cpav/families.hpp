#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cpav/common.hpp"
#include "cpav/oracle.hpp"
#include "cpav/permutation.hpp"
#include "cpav/polynomial.hpp"
#include "cpav/series.hpp"

namespace cpav {

/// tau = 1 3 2 4 5 ... p
struct Identity132p {
    int p;
    explicit Identity132p(int p_) : p(p_) {
        if (p < 4) throw invalid_input("Identity132p: p must be >= 4");
    }
};

/// tau = 1 p 2 3 ... (p-1)
struct OneP2 {
    int p;
    explicit OneP2(int p_) : p(p_) {
        if (p < 4) throw invalid_input("OneP2: p must be >= 4");
    }
};

/// tau = 1 3 4 ... (p-1) 2 p
struct Fuss {
    int p;
    explicit Fuss(int p_) : p(p_) {
        if (p < 5) throw invalid_input("Fuss: p must be >= 5");
    }
};

/// tau starts with 1 and ends with 2, length j >= 3; U comes from a series
/// integral rather than a recursion.
struct EndsInTwo {
    Pattern tau;
    int j;
    int destau;

    explicit EndsInTwo(Pattern t) : tau(std::move(t)), j(tau.length()), destau(tau.descents()) {
        if (j < 3 || tau.perm().at(1) != 1 || tau.perm().at(j) != 2)
            throw invalid_input("EndsInTwo: pattern must start with 1, end with 2, length >= 3");
    }
};

/// tau = 1 2 ... (j-1) gamma j, where gamma permutes {j+1, ..., j+p}, p >= 1.
struct MiddleGamma {
    Pattern tau;
    int j;
    int p;
    int destau;

    explicit MiddleGamma(Pattern t) : tau(std::move(t)), destau(tau.descents()) {
        const int len = tau.length();
        j = tau.perm().at(len);
        p = len - j;
        if (j < 3 || p < 1) throw invalid_input("MiddleGamma: need tau = 1 2 .. (j-1) gamma j with j >= 3, gamma nonempty");
        for (int i = 1; i <= j - 1; ++i)
            if (tau.perm().at(i) != i) throw invalid_input("MiddleGamma: tau must start 1 2 .. (j-1)");
        for (int i = j; i <= len - 1; ++i)
            if (tau.perm().at(i) <= j) throw invalid_input("MiddleGamma: gamma must permute j+1 .. j+p");
    }
};

/// Any pattern starting with 1 (length >= 2); U comes from the brute-force
/// oracle via the reciprocal of NM(t,1,y).
struct Generic {
    Pattern tau;
    int oracle_bound;

    explicit Generic(Pattern t, int bound = kDefaultOracleBound) : tau(std::move(t)), oracle_bound(bound) {
        if (!tau.starts_with_one() || tau.length() < 2)
            throw invalid_input("Generic: pattern must start with 1 and have length >= 2");
    }
};

using PatternFamily = std::variant<Identity132p, OneP2, Fuss, EndsInTwo, MiddleGamma, Generic>;

inline Pattern family_pattern(const PatternFamily& family) {
    return std::visit(
        [](const auto& f) -> Pattern {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Identity132p>) {
                std::vector<int> v(static_cast<size_t>(f.p));
                std::iota(v.begin(), v.end(), 1);
                std::swap(v[1], v[2]);
                return Pattern(std::move(v));
            } else if constexpr (std::is_same_v<T, OneP2>) {
                std::vector<int> v{1, f.p};
                for (int i = 2; i <= f.p - 1; ++i) v.push_back(i);
                return Pattern(std::move(v));
            } else if constexpr (std::is_same_v<T, Fuss>) {
                std::vector<int> v{1};
                for (int i = 3; i <= f.p - 1; ++i) v.push_back(i);
                v.push_back(2);
                v.push_back(f.p);
                return Pattern(std::move(v));
            } else {
                return f.tau;
            }
        },
        family);
}

inline std::string family_name(const PatternFamily& family) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Identity132p>)
                return "1324..p(p=" + std::to_string(f.p) + ")";
            else if constexpr (std::is_same_v<T, OneP2>)
                return "1p2..p-1(p=" + std::to_string(f.p) + ")";
            else if constexpr (std::is_same_v<T, Fuss>)
                return "134..p-1,2,p(p=" + std::to_string(f.p) + ")";
            else if constexpr (std::is_same_v<T, EndsInTwo>)
                return "ends-in-2(" + f.tau.str() + ")";
            else if constexpr (std::is_same_v<T, MiddleGamma>)
                return "middle-gamma(" + f.tau.str() + ")";
            else
                return "generic(" + f.tau.str() + ")";
        },
        family);
}

/// U_{tau,0..N}(y); U_0 = 1 and U_1 = -y for every family.
struct UTable {
    PatternFamily family;
    std::vector<PolyY> u;  // index n holds U_n, n = 0..N

    int order() const { return static_cast<int>(u.size()) - 1; }
    const PolyY& at(int n) const { return u[static_cast<size_t>(n)]; }

    EgfSeries<PolyY> series() const { return EgfSeries<PolyY>(order(), u); }
};

namespace detail {

template <typename TermFn>
std::vector<PolyY> run_u_recursion(int N, TermFn&& extra_terms) {
    std::vector<PolyY> u(static_cast<size_t>(N) + 1);
    u[0] = PolyY(1);
    if (N >= 1) u[1] = PolyY::monomial(1, -1);
    const PolyY one_minus_y = PolyY(1) - PolyY::monomial(1, 1);
    auto at = [&](int m) { return m < 0 ? PolyY() : u[static_cast<size_t>(m)]; };
    for (int n = 2; n <= N; ++n) {
        PolyY val = one_minus_y * at(n - 1);
        extra_terms(n, at, val);
        u[static_cast<size_t>(n)] = val;
    }
    return u;
}

/// (-y)^k as a PolyY.
inline PolyY neg_y_pow(int k) {
    return PolyY::monomial(k, (k % 2 == 0) ? BigRational(1) : BigRational(-1));
}

}  // namespace detail

/// The U-coefficient table for a family, to order N.
inline UTable u_coeffs(const PatternFamily& family, int N) {
    if (N < 1) throw invalid_input("u_coeffs: N must be >= 1");
    std::vector<PolyY> u = std::visit(
        [N](const auto& f) -> std::vector<PolyY> {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Identity132p>) {
                if (f.p == 4) {
                    return detail::run_u_recursion(N, [](int n, auto at, PolyY& val) {
                        for (int k = 2; k <= n / 2; ++k)
                            val += at(n - 2 * k + 1) * detail::neg_y_pow(k - 1) * BigRational(catalan(k - 1));
                    });
                }
                const int p = f.p;
                return detail::run_u_recursion(N, [p](int n, auto at, PolyY& val) {
                    for (int k = 1; k <= (n - 2) / (p - 2); ++k)
                        val += at(n - (k * (p - 2) + 1)) * detail::neg_y_pow(k);
                });
            } else if constexpr (std::is_same_v<T, OneP2>) {
                const int p = f.p;
                return detail::run_u_recursion(N, [p](int n, auto at, PolyY& val) {
                    for (int k = 1; k <= (n - 2) / (p - 2); ++k)
                        val += at(n - (k * (p - 2) + 1)) * detail::neg_y_pow(k) *
                               BigRational(binomial(n - k * (p - 3) - 2, k));
                });
            } else if constexpr (std::is_same_v<T, Fuss>) {
                const int p = f.p;
                return detail::run_u_recursion(N, [p](int n, auto at, PolyY& val) {
                    for (int k = 1; k <= (n - 2) / (p - 2); ++k)
                        val += at(n - (k * (p - 2) + 1)) * detail::neg_y_pow(k) *
                               BigRational(BigInt(binomial(k * (p - 2), k)), BigInt((p - 3) * k + 1));
                });
            } else if constexpr (std::is_same_v<T, MiddleGamma>) {
                const int j = f.j, p = f.p, d = f.destau;
                return detail::run_u_recursion(N, [j, p, d](int n, auto at, PolyY& val) {
                    val -= at(n - p - j + 1) * PolyY::monomial(d, 1) * BigRational(binomial(n - j, p));
                });
            } else if constexpr (std::is_same_v<T, EndsInTwo>) {
                // U = 1 - y * integral of exp((1-y)s - y^{des tau} s^{j-1}/(j-1)!)
                EgfSeries<PolyY> g(N);
                g.at(1) = PolyY(1) - PolyY::monomial(1, 1);
                if (f.j - 1 <= N) g.at(f.j - 1) += PolyY::monomial(f.destau, -1);
                EgfSeries<PolyY> integral = series_integrate(series_exp(g));
                EgfSeries<PolyY> result =
                    series_sub(series_one<PolyY>(N), series_scale(integral, PolyY::monomial(1, 1)));
                return result.coeffs();
            } else {
                static_assert(std::is_same_v<T, Generic>);
                if (N > f.oracle_bound)
                    throw resource_limit("u_coeffs: generic family needs brute force up to n = " + std::to_string(N) +
                                         ", above bound " + std::to_string(f.oracle_bound));
                EgfSeries<PolyY> nm(N);
                for (int n = 0; n <= N; ++n) nm.at(n) = brute_nm_poly(f.tau, n).substitute_x(1);
                return series_reciprocal(nm).coeffs();
            }
        },
        family);
    if (!(u[1] == PolyY::monomial(1, -1))) throw std::logic_error("u_coeffs: U_1 != -y");
    return UTable{family, std::move(u)};
}

/// NM(t,x,y) = (1/U)^x as a PolyXY-coefficient series of the given order.
inline EgfSeries<PolyXY> nm_series(const PatternFamily& family, int N) {
    if (N < 0) throw invalid_input("nm_series: N must be >= 0");
    if (N == 0) return series_one<PolyXY>(0);
    return series_pow_symbolic_x(u_coeffs(family, N).series());
}

/// Termwise evaluation at rational (x, y).
inline EgfSeries<BigRational> nm_specialize(const EgfSeries<PolyXY>& series, const BigRational& x,
                                            const BigRational& y) {
    return series_specialize(series, x, y);
}

}  // namespace cpav
