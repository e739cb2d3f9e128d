#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cpav/common.hpp"

namespace cpav {

/// A permutation of {1,...,n} in one-line notation. n = 0 (empty) is allowed.
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
        const int n = static_cast<int>(entries_.size());
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int v : entries_) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                throw invalid_input("Permutation: entries must be exactly 1..n");
            seen[static_cast<size_t>(v)] = 1;
        }
    }

    int size() const { return static_cast<int>(entries_.size()); }
    /// Value at 1-based position i.
    int at(int i) const { return entries_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& entries() const { return entries_; }
    std::span<const int> span() const { return entries_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) os << ' ';
            os << entries_[i];
        }
        return os.str();
    }

  private:
    std::vector<int> entries_;
};

/// Replace the i-th smallest value of a word of distinct integers by i.
inline Permutation reduce(std::span<const int> word) {
    std::vector<int> idx(word.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return word[static_cast<size_t>(a)] < word[static_cast<size_t>(b)]; });
    std::vector<int> out(word.size());
    for (size_t r = 0; r < idx.size(); ++r) {
        if (r > 0 && word[static_cast<size_t>(idx[r])] == word[static_cast<size_t>(idx[r - 1])])
            throw invalid_input("reduce: entries must be pairwise distinct");
        out[static_cast<size_t>(idx[r])] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(out));
}

inline Permutation reduce(const std::vector<int>& word) { return reduce(std::span<const int>(word)); }

inline int descent_count(std::span<const int> w) {
    int d = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++d;
    return d;
}

inline int descent_count(const Permutation& p) { return descent_count(p.span()); }

inline int lrmin_count(std::span<const int> w) {
    int c = 0, best = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i == 0 || w[i] < best) {
            ++c;
            best = w[i];
        }
    }
    return c;
}

inline int lrmin_count(const Permutation& p) { return lrmin_count(p.span()); }

/// A pattern: a permutation tau of length j >= 1, with des(tau) cached.
/// Matching never requires tau_1 = 1; the recursion families check that themselves.
class Pattern {
  public:
    explicit Pattern(Permutation perm) : perm_(std::move(perm)), descents_(cpav::descent_count(perm_)) {
        if (perm_.size() < 1) throw invalid_input("Pattern: length must be >= 1");
    }

    explicit Pattern(std::vector<int> entries) : Pattern(Permutation(std::move(entries))) {}

    int length() const { return perm_.size(); }
    int descents() const { return descents_; }
    const Permutation& perm() const { return perm_; }
    bool starts_with_one() const { return perm_.at(1) == 1; }

    /// True when the window (distinct values) is order-isomorphic to tau.
    bool window_matches(std::span<const int> w) const {
        const auto& t = perm_.entries();
        const size_t j = t.size();
        if (w.size() != j) return false;
        for (size_t a = 0; a + 1 < j; ++a)
            for (size_t b = a + 1; b < j; ++b)
                if ((w[a] < w[b]) != (t[a] < t[b])) return false;
        return true;
    }

    bool operator==(const Pattern&) const = default;

    std::string str() const {
        std::ostringstream os;
        const auto& e = perm_.entries();
        bool multi = perm_.size() > 9;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i && multi) os << ',';
            os << e[i];
        }
        return os.str();
    }

    /// Canonical dash-separated form, used for cache keys: "1-3-2-4".
    std::string canonical() const {
        std::ostringstream os;
        const auto& e = perm_.entries();
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << '-';
            os << e[i];
        }
        return os.str();
    }

  private:
    Permutation perm_;
    int descents_ = 0;
};

/// Parse "1324" (single digits, j <= 9) or "1,3,2,4" / "1-3-2-4" (any j).
inline Pattern parse_pattern(const std::string& s) {
    std::vector<int> vals;
    if (s.find(',') != std::string::npos || s.find('-') != std::string::npos) {
        std::string cur;
        for (char c : s + ",") {
            if (c == ',' || c == '-') {
                if (cur.empty()) throw invalid_input("parse_pattern: empty component in '" + s + "'");
                vals.push_back(std::stoi(cur));
                cur.clear();
            } else if (c >= '0' && c <= '9') {
                cur += c;
            } else {
                throw invalid_input("parse_pattern: bad character in '" + s + "'");
            }
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw invalid_input("parse_pattern: bad digit in '" + s + "'");
            vals.push_back(c - '0');
        }
    }
    if (vals.empty()) throw invalid_input("parse_pattern: empty pattern");
    return Pattern(std::move(vals));
}

/// Number of windows of sigma order-isomorphic to tau; 0 when the word is shorter than tau.
inline int match_count(std::span<const int> sigma, const Pattern& tau) {
    const int n = static_cast<int>(sigma.size());
    const int j = tau.length();
    int c = 0;
    for (int i = 0; i + j <= n; ++i)
        if (tau.window_matches(sigma.subspan(static_cast<size_t>(i), static_cast<size_t>(j)))) ++c;
    return c;
}

inline int match_count(const Permutation& sigma, const Pattern& tau) { return match_count(sigma.span(), tau); }

inline bool has_match(std::span<const int> sigma, const Pattern& tau) {
    const int n = static_cast<int>(sigma.size());
    const int j = tau.length();
    for (int i = 0; i + j <= n; ++i)
        if (tau.window_matches(sigma.subspan(static_cast<size_t>(i), static_cast<size_t>(j)))) return true;
    return false;
}

/// Canonical cycle form: each cycle lists its minimum first, and the cycle
/// minima strictly decrease left to right.
class CyclePermutation {
  public:
    explicit CyclePermutation(std::vector<std::vector<int>> cycles) : cycles_(std::move(cycles)) {
        int n = 0;
        for (const auto& c : cycles_) n += static_cast<int>(c.size());
        size_ = n;
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        int prev_min = n + 1;
        for (const auto& c : cycles_) {
            if (c.empty()) throw invalid_input("CyclePermutation: empty cycle");
            int mn = *std::min_element(c.begin(), c.end());
            if (c.front() != mn) throw invalid_input("CyclePermutation: cycle must start with its minimum");
            if (mn >= prev_min) throw invalid_input("CyclePermutation: cycle minima must strictly decrease");
            prev_min = mn;
            for (int v : c) {
                if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                    throw invalid_input("CyclePermutation: cycles must partition 1..n");
                seen[static_cast<size_t>(v)] = 1;
            }
        }
    }

    int size() const { return size_; }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    int cycle_count() const { return static_cast<int>(cycles_.size()); }

    bool operator==(const CyclePermutation&) const = default;

    std::string str() const {
        std::ostringstream os;
        for (const auto& c : cycles_) {
            os << '(';
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << ',';
                os << c[i];
            }
            os << ')';
        }
        return os.str();
    }

  private:
    std::vector<std::vector<int>> cycles_;
    int size_ = 0;
};

/// Decompose sigma (as the function i -> sigma_i) into canonical cycle form.
inline CyclePermutation to_cycles(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> cycles;
    // Scanning starts upward means each unused start is its orbit's minimum,
    // so orbits come out min-first in increasing-min order; reverse at the end.
    for (int start = 1; start <= n; ++start) {
        if (used[static_cast<size_t>(start)]) continue;
        std::vector<int> cyc;
        int v = start;
        do {
            used[static_cast<size_t>(v)] = 1;
            cyc.push_back(v);
            v = sigma.at(v);
        } while (v != start);
        cycles.push_back(std::move(cyc));
    }
    std::reverse(cycles.begin(), cycles.end());
    return CyclePermutation(std::move(cycles));
}

/// Erase parentheses and commas: concatenate the cycles into one-line form.
inline Permutation flatten(const CyclePermutation& c) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(c.size()));
    for (const auto& cyc : c.cycles()) out.insert(out.end(), cyc.begin(), cyc.end());
    return Permutation(std::move(out));
}

/// Sum over cycles of 1 + des(cycle word); a singleton cycle contributes 1.
inline int cdes(const CyclePermutation& c) {
    int total = 0;
    for (const auto& cyc : c.cycles()) total += 1 + descent_count(std::span<const int>(cyc));
    return total;
}

/// Cyclic tau-matches over all cycles of length >= |tau|, indices mod cycle length.
/// A cycle of length exactly |tau| still yields one window per starting index.
inline int cycle_match_count(const CyclePermutation& c, const Pattern& tau) {
    const int j = tau.length();
    int total = 0;
    std::vector<int> window(static_cast<size_t>(j));
    for (const auto& cyc : c.cycles()) {
        const int p = static_cast<int>(cyc.size());
        if (p < j) continue;
        for (int r = 0; r < p; ++r) {
            for (int s = 0; s < j; ++s) window[static_cast<size_t>(s)] = cyc[static_cast<size_t>((r + s) % p)];
            if (tau.window_matches(window)) ++total;
        }
    }
    return total;
}

/// Lexicographic rank interval [lo, hi) over S_n; n <= 20.
class PermutationRange {
  public:
    PermutationRange(int n, std::uint64_t lo, std::uint64_t hi) : n_(n), lo_(lo), hi_(hi) {
        if (n < 0 || n > 20) throw invalid_input("PermutationRange: n must be in 0..20");
        const std::uint64_t total = factorial_u64(n);
        if (lo > hi || hi > total) throw invalid_input("PermutationRange: bad rank interval");
    }

    explicit PermutationRange(int n) : PermutationRange(n, 0, factorial_u64(n)) {}

    /// Permutation of {1..n} with the given lexicographic rank (factorial number system).
    static std::vector<int> unrank(int n, std::uint64_t rank) {
        std::vector<int> pool(static_cast<size_t>(n));
        std::iota(pool.begin(), pool.end(), 1);
        std::vector<int> out;
        out.reserve(static_cast<size_t>(n));
        for (int i = n; i >= 1; --i) {
            const std::uint64_t f = factorial_u64(i - 1);
            const size_t q = static_cast<size_t>(rank / f);
            rank %= f;
            out.push_back(pool[q]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
        }
        return out;
    }

    static std::uint64_t rank_of(std::span<const int> w) {
        const int n = static_cast<int>(w.size());
        std::uint64_t r = 0;
        for (int i = 0; i < n; ++i) {
            int smaller = 0;
            for (int k = i + 1; k < n; ++k)
                if (w[static_cast<size_t>(k)] < w[static_cast<size_t>(i)]) ++smaller;
            r += static_cast<std::uint64_t>(smaller) * factorial_u64(n - 1 - i);
        }
        return r;
    }

    class iterator {
      public:
        iterator(int n, std::uint64_t rank, std::uint64_t limit) : rank_(rank), limit_(limit) {
            if (rank_ < limit_) current_ = unrank(n, rank_);
        }

        const std::vector<int>& operator*() const { return current_; }

        iterator& operator++() {
            ++rank_;
            if (rank_ < limit_) std::next_permutation(current_.begin(), current_.end());
            return *this;
        }

        bool operator!=(const iterator& o) const { return rank_ != o.rank_; }

      private:
        std::uint64_t rank_;
        std::uint64_t limit_;
        std::vector<int> current_;
    };

    iterator begin() const { return iterator(n_, lo_, hi_); }
    iterator end() const { return iterator(n_, hi_, hi_); }

    int n() const { return n_; }
    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

  private:
    int n_;
    std::uint64_t lo_, hi_;
};

inline PermutationRange permutations_of(int n) { return PermutationRange(n); }

}  // namespace cpav
