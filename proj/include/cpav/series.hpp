#pragma once

#include <vector>

#include "cpav/common.hpp"
#include "cpav/polynomial.hpp"

namespace cpav {

/// Truncated exponential generating function sum_{n=0}^{N} c_n t^n/n!.
/// Coefficients are stored n!-scaled (c_n is the coefficient of t^n/n!).
/// C is BigRational, PolyY, or PolyXY; all arithmetic is exact.
template <typename C>
class EgfSeries {
  public:
    explicit EgfSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, C(0)) {
        if (order < 0) throw invalid_input("EgfSeries: order must be >= 0");
    }

    EgfSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (order < 0 || coeffs_.size() != static_cast<size_t>(order) + 1)
            throw invalid_input("EgfSeries: need exactly order+1 coefficients");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& at(int n) const { return coeffs_[static_cast<size_t>(n)]; }
    C& at(int n) { return coeffs_[static_cast<size_t>(n)]; }
    const std::vector<C>& coeffs() const { return coeffs_; }

    bool operator==(const EgfSeries&) const = default;

  private:
    std::vector<C> coeffs_;
};

template <typename C>
EgfSeries<C> series_one(int order) {
    EgfSeries<C> s(order);
    s.at(0) = C(1);
    return s;
}

template <typename C>
EgfSeries<C> series_add(const EgfSeries<C>& a, const EgfSeries<C>& b) {
    if (a.order() != b.order()) throw invalid_input("series_add: order mismatch");
    EgfSeries<C> r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.at(n) = a.at(n) + b.at(n);
    return r;
}

template <typename C>
EgfSeries<C> series_sub(const EgfSeries<C>& a, const EgfSeries<C>& b) {
    if (a.order() != b.order()) throw invalid_input("series_sub: order mismatch");
    EgfSeries<C> r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.at(n) = a.at(n) - b.at(n);
    return r;
}

/// Multiply every coefficient by a constant of the coefficient ring.
template <typename C>
EgfSeries<C> series_scale(const EgfSeries<C>& a, const C& s) {
    EgfSeries<C> r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.at(n) = a.at(n) * s;
    return r;
}

/// EGF product: c_n = sum_k C(n,k) a_k b_{n-k}.
template <typename C>
EgfSeries<C> series_mul(const EgfSeries<C>& a, const EgfSeries<C>& b) {
    if (a.order() != b.order()) throw invalid_input("series_mul: order mismatch");
    const int N = a.order();
    EgfSeries<C> r(N);
    for (int n = 0; n <= N; ++n) {
        C acc(0);
        for (int k = 0; k <= n; ++k) acc += (a.at(k) * b.at(n - k)) * BigRational(binomial(n, k));
        r.at(n) = acc;
    }
    return r;
}

/// Reciprocal of a series with constant term 1: series_mul(a, result) = 1.
template <typename C>
EgfSeries<C> series_reciprocal(const EgfSeries<C>& a) {
    if (!(a.at(0) == C(1))) throw invalid_input("series_reciprocal: constant term must be 1");
    const int N = a.order();
    EgfSeries<C> b(N);
    b.at(0) = C(1);
    for (int n = 1; n <= N; ++n) {
        C acc(0);
        for (int k = 1; k <= n; ++k) acc += (a.at(k) * b.at(n - k)) * BigRational(binomial(n, k));
        b.at(n) = -acc;
    }
    return b;
}

/// log of a series with constant term 1. Inverse of series_exp.
template <typename C>
EgfSeries<C> series_log(const EgfSeries<C>& a) {
    if (!(a.at(0) == C(1))) throw invalid_input("series_log: constant term must be 1");
    const int N = a.order();
    EgfSeries<C> L(N);
    // From a' = L' a:  a_{n+1} = sum_{k=0}^{n} C(n,k) L_{k+1} a_{n-k}, solved for L_{n+1}.
    for (int n = 0; n < N; ++n) {
        C acc = a.at(n + 1);
        for (int k = 0; k < n; ++k) acc -= (L.at(k + 1) * a.at(n - k)) * BigRational(binomial(n, k));
        L.at(n + 1) = acc;
    }
    return L;
}

/// exp of a series with constant term 0.
template <typename C>
EgfSeries<C> series_exp(const EgfSeries<C>& a) {
    if (!(a.at(0) == C(0))) throw invalid_input("series_exp: constant term must be 0");
    const int N = a.order();
    EgfSeries<C> b(N);
    b.at(0) = C(1);
    // b' = a' b:  b_{n+1} = sum_{k=0}^{n} C(n,k) a_{k+1} b_{n-k}.
    for (int n = 0; n < N; ++n) {
        C acc(0);
        for (int k = 0; k <= n; ++k) acc += (a.at(k + 1) * b.at(n - k)) * BigRational(binomial(n, k));
        b.at(n + 1) = acc;
    }
    return b;
}

/// Termwise integral from 0: b_{n+1} = a_n, b_0 = 0; the top coefficient a_N drops out.
template <typename C>
EgfSeries<C> series_integrate(const EgfSeries<C>& a) {
    const int N = a.order();
    EgfSeries<C> b(N);
    for (int n = 0; n < N; ++n) b.at(n + 1) = a.at(n);
    return b;
}

/// exp(x * m) for a PolyY-coefficient series m with m_0 = 0, expanding x symbolically:
/// coefficient of t^n/n! is sum_{k} x^k * (n!-scaled coefficient of m^k/k!).
/// Powers beyond k = N vanish because m has no constant term.
inline EgfSeries<PolyXY> series_exp_symbolic_x(const EgfSeries<PolyY>& m) {
    if (!m.at(0).is_zero()) throw invalid_input("series_exp_symbolic_x: constant term must be 0");
    const int N = m.order();
    EgfSeries<PolyXY> out(N);
    out.at(0) = PolyXY(1);
    EgfSeries<PolyY> power = series_one<PolyY>(N);  // m^k / k!
    BigRational kfact = 1;
    for (int k = 1; k <= N; ++k) {
        power = series_mul(power, m);
        kfact *= k;
        for (int n = k; n <= N; ++n) {
            const PolyY term = power.at(n) * (BigRational(1) / kfact);
            for (const auto& [ye, c] : term.terms()) out.at(n).add_term(k, ye, c);
        }
    }
    return out;
}

/// (1/u)^x for a PolyY-coefficient series u with constant term 1:
/// exp(x * L) where L = -log(u). Specializing at x = 1 recovers series_reciprocal(u).
inline EgfSeries<PolyXY> series_pow_symbolic_x(const EgfSeries<PolyY>& u) {
    EgfSeries<PolyY> L = series_log(u);
    EgfSeries<PolyY> negL(L.order());
    for (int n = 0; n <= L.order(); ++n) negL.at(n) = -L.at(n);
    return series_exp_symbolic_x(negL);
}

inline EgfSeries<BigRational> series_specialize(const EgfSeries<PolyXY>& s, const BigRational& x,
                                                const BigRational& y) {
    EgfSeries<BigRational> r(s.order());
    for (int n = 0; n <= s.order(); ++n) r.at(n) = s.at(n).eval(x, y);
    return r;
}

inline EgfSeries<PolyY> series_substitute_x(const EgfSeries<PolyXY>& s, const BigRational& x) {
    EgfSeries<PolyY> r(s.order());
    for (int n = 0; n <= s.order(); ++n) r.at(n) = s.at(n).substitute_x(x);
    return r;
}

inline EgfSeries<BigRational> series_y_slice(const EgfSeries<PolyY>& s, int y_exp) {
    EgfSeries<BigRational> r(s.order());
    for (int n = 0; n <= s.order(); ++n) r.at(n) = s.at(n).coefficient(y_exp);
    return r;
}

}  // namespace cpav
