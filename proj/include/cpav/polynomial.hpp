#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "cpav/common.hpp"

namespace cpav {

/// Sparse exact polynomial in y. No zero coefficients are stored.
class PolyY {
  public:
    PolyY() = default;
    explicit PolyY(long c) { add_term(0, BigRational(c)); }
    explicit PolyY(const BigRational& c) { add_term(0, c); }

    static PolyY monomial(int y_exp, BigRational c) {
        PolyY p;
        p.add_term(y_exp, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    const std::map<int, BigRational>& terms() const { return terms_; }

    BigRational coefficient(int y_exp) const {
        auto it = terms_.find(y_exp);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    void add_term(int y_exp, const BigRational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(y_exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PolyY& operator+=(const PolyY& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyY& operator-=(const PolyY& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
    friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
    friend PolyY operator-(const PolyY& a) {
        PolyY r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend PolyY operator*(const PolyY& a, const PolyY& b) {
        PolyY r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend PolyY operator*(const PolyY& a, const BigRational& s) {
        PolyY r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    BigRational eval(const BigRational& y) const {
        BigRational total = 0;
        for (const auto& [e, c] : terms_) {
            BigRational p = 1;
            for (int i = 0; i < e; ++i) p *= y;
            total += c * p;
        }
        return total;
    }

    bool operator==(const PolyY&) const = default;

  private:
    std::map<int, BigRational> terms_;
};

/// Monomial key for PolyXY, ordered by (y, x): ascending y-powers, ascending x within.
struct MonomialXY {
    int x = 0;
    int y = 0;
    auto operator<=>(const MonomialXY& o) const { return std::pair(y, x) <=> std::pair(o.y, o.x); }
    bool operator==(const MonomialXY&) const = default;
};

/// Sparse exact polynomial in x and y. No zero coefficients are stored.
class PolyXY {
  public:
    PolyXY() = default;
    explicit PolyXY(long c) { add_term(0, 0, BigRational(c)); }
    explicit PolyXY(const BigRational& c) { add_term(0, 0, c); }

    static PolyXY monomial(int x_exp, int y_exp, BigRational c) {
        PolyXY p;
        p.add_term(x_exp, y_exp, std::move(c));
        return p;
    }

    /// p(y) * x^{x_exp}
    static PolyXY from_y_poly(const PolyY& p, int x_exp = 0) {
        PolyXY r;
        for (const auto& [e, c] : p.terms()) r.terms_.emplace(MonomialXY{x_exp, e}, c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<MonomialXY, BigRational>& terms() const { return terms_; }

    BigRational coefficient(int x_exp, int y_exp) const {
        auto it = terms_.find(MonomialXY{x_exp, y_exp});
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    void add_term(int x_exp, int y_exp, const BigRational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(MonomialXY{x_exp, y_exp}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PolyXY& operator+=(const PolyXY& o) {
        for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, c);
        return *this;
    }
    PolyXY& operator-=(const PolyXY& o) {
        for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, -c);
        return *this;
    }

    friend PolyXY operator+(PolyXY a, const PolyXY& b) { return a += b; }
    friend PolyXY operator-(PolyXY a, const PolyXY& b) { return a -= b; }
    friend PolyXY operator-(const PolyXY& a) {
        PolyXY r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend PolyXY operator*(const PolyXY& a, const PolyXY& b) {
        PolyXY r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.x + mb.x, ma.y + mb.y, ca * cb);
        return r;
    }

    friend PolyXY operator*(const PolyXY& a, const BigRational& s) {
        PolyXY r;
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    BigRational eval(const BigRational& x, const BigRational& y) const {
        BigRational total = 0;
        for (const auto& [m, c] : terms_) {
            BigRational p = 1;
            for (int i = 0; i < m.x; ++i) p *= x;
            for (int i = 0; i < m.y; ++i) p *= y;
            total += c * p;
        }
        return total;
    }

    /// Substitute a rational value for x, leaving a polynomial in y.
    PolyY substitute_x(const BigRational& x) const {
        PolyY r;
        for (const auto& [m, c] : terms_) {
            BigRational p = c;
            for (int i = 0; i < m.x; ++i) p *= x;
            r.add_term(m.y, p);
        }
        return r;
    }

    bool operator==(const PolyXY&) const = default;

  private:
    std::map<MonomialXY, BigRational> terms_;
};

namespace detail {

inline void format_exp(std::ostringstream& os, char var, int e, bool latex) {
    if (e == 0) return;
    os << var;
    if (e == 1) return;
    if (latex && e >= 10)
        os << "^{" << e << "}";
    else
        os << '^' << e;
}

inline void format_coeff(std::ostringstream& os, const BigRational& c, bool has_vars) {
    BigInt num = boost::multiprecision::numerator(c);
    BigInt den = boost::multiprecision::denominator(c);
    if (!has_vars) {
        os << num.str();
        if (den != 1) os << '/' << den.str();
        return;
    }
    if (num == 1 && den == 1) return;
    os << num.str();
    if (den != 1) os << '/' << den.str();
    os << ' ';
}

template <typename TermIter>
std::string format_terms(TermIter begin, TermIter end, bool latex) {
    if (begin == end) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = begin; it != end; ++it) {
        const auto& [xe, ye, c] = *it;
        const bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (latex ? (neg ? "-" : "+") : (neg ? " - " : " + "));
        }
        first = false;
        const BigRational a = neg ? BigRational(-c) : c;
        format_coeff(os, a, xe != 0 || ye != 0);
        if (xe != 0) {
            format_exp(os, 'x', xe, latex);
            if (ye != 0) os << ' ';
        }
        format_exp(os, 'y', ye, latex);
    }
    return os.str();
}

}  // namespace detail

inline std::string format_poly(const PolyY& p, bool latex = false) {
    std::vector<std::tuple<int, int, BigRational>> t;
    for (const auto& [e, c] : p.terms()) t.emplace_back(0, e, c);
    return detail::format_terms(t.begin(), t.end(), latex);
}

inline std::string format_poly(const PolyXY& p, bool latex = false) {
    std::vector<std::tuple<int, int, BigRational>> t;
    for (const auto& [m, c] : p.terms()) t.emplace_back(m.x, m.y, c);
    return detail::format_terms(t.begin(), t.end(), latex);
}

/// Parse "x y+4 x y^2-3 x^2 y^3+y^{10}" style polynomials (integer or a/b coefficients).
inline PolyXY parse_poly_xy(const std::string& s) {
    PolyXY out;
    size_t i = 0;
    const size_t n = s.size();
    auto skip_ws = [&] {
        while (i < n && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    auto parse_uint = [&]() -> BigInt {
        size_t start = i;
        while (i < n && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) throw invalid_input("parse_poly_xy: expected digits in '" + s + "'");
        return BigInt(s.substr(start, i - start));
    };
    auto parse_exp = [&]() -> int {
        if (i < n && s[i] == '^') {
            ++i;
            bool braced = i < n && s[i] == '{';
            if (braced) ++i;
            int e = static_cast<int>(parse_uint());
            if (braced) {
                if (i >= n || s[i] != '}') throw invalid_input("parse_poly_xy: missing '}' in '" + s + "'");
                ++i;
            }
            return e;
        }
        return 1;
    };
    skip_ws();
    bool any = false;
    while (i < n) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        } else if (any) {
            throw invalid_input("parse_poly_xy: expected '+' or '-' in '" + s + "'");
        }
        skip_ws();
        BigRational coeff = 1;
        bool saw_something = false;
        if (i < n && s[i] >= '0' && s[i] <= '9') {
            BigInt num = parse_uint();
            BigInt den = 1;
            if (i < n && s[i] == '/') {
                ++i;
                den = parse_uint();
            }
            coeff = BigRational(num, den);
            saw_something = true;
            skip_ws();
        }
        int xe = 0, ye = 0;
        if (i < n && s[i] == 'x') {
            ++i;
            xe = parse_exp();
            saw_something = true;
            skip_ws();
        }
        if (i < n && s[i] == 'y') {
            ++i;
            ye = parse_exp();
            saw_something = true;
            skip_ws();
        }
        if (!saw_something) throw invalid_input("parse_poly_xy: empty term in '" + s + "'");
        out.add_term(xe, ye, coeff * sign);
        any = true;
        skip_ws();
    }
    if (!any) throw invalid_input("parse_poly_xy: empty input");
    return out;
}

inline PolyY parse_poly_y(const std::string& s) {
    PolyXY p = parse_poly_xy(s);
    for (const auto& [m, c] : p.terms())
        if (m.x != 0) throw invalid_input("parse_poly_y: unexpected x term in '" + s + "'");
    return p.substitute_x(1);
}

}  // namespace cpav
