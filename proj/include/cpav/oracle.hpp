#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cpav/common.hpp"
#include "cpav/permutation.hpp"
#include "cpav/polynomial.hpp"
#include "cpav/series.hpp"

namespace cpav {

namespace detail {

/// Dense (x_exp, y_exp) -> count table converted to a PolyXY at the end;
/// keeps the hot permutation loop free of rational arithmetic.
class CountTable {
  public:
    explicit CountTable(int n) : n_(n), counts_(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1), 0) {}

    void bump(int x_exp, int y_exp) { ++counts_[static_cast<size_t>(x_exp) * (n_ + 1) + static_cast<size_t>(y_exp)]; }

    PolyXY to_poly() const {
        PolyXY p;
        for (int x = 0; x <= n_; ++x)
            for (int y = 0; y <= n_; ++y) {
                const std::uint64_t c = counts_[static_cast<size_t>(x) * (n_ + 1) + static_cast<size_t>(y)];
                if (c) p.add_term(x, y, BigRational(c));
            }
        return p;
    }

  private:
    int n_;
    std::vector<std::uint64_t> counts_;
};

/// Walks the cycles of w (one-line, values 1..n) in canonical order.
/// Calls f(cycle_word) for each cycle, min-first, in increasing-min order.
template <typename F>
void for_each_cycle(std::span<const int> w, std::vector<char>& used, std::vector<int>& scratch, F&& f) {
    const int n = static_cast<int>(w.size());
    std::fill(used.begin(), used.end(), 0);
    for (int start = 1; start <= n; ++start) {
        if (used[static_cast<size_t>(start)]) continue;
        scratch.clear();
        int v = start;
        do {
            used[static_cast<size_t>(v)] = 1;
            scratch.push_back(v);
            v = w[static_cast<size_t>(v - 1)];
        } while (v != start);
        f(std::span<const int>(scratch));
    }
}

inline bool cycle_has_match(std::span<const int> cyc, const Pattern& tau, std::vector<int>& window) {
    const int j = tau.length();
    const int p = static_cast<int>(cyc.size());
    if (p < j) return false;
    window.resize(static_cast<size_t>(j));
    for (int r = 0; r < p; ++r) {
        for (int s = 0; s < j; ++s) window[static_cast<size_t>(s)] = cyc[static_cast<size_t>((r + s) % p)];
        if (tau.window_matches(window)) return true;
    }
    return false;
}

}  // namespace detail

/// Sum over sigma in S_n with no tau-match of x^{LRmin(sigma)} y^{1+des(sigma)},
/// restricted to lexicographic ranks [rank_lo, rank_hi). n = 0 gives the constant 1.
inline PolyXY brute_nm_poly(const Pattern& tau, int n, std::uint64_t rank_lo, std::uint64_t rank_hi) {
    if (n < 0) throw invalid_input("brute_nm_poly: n must be >= 0");
    if (n == 0) return PolyXY(1);
    detail::CountTable counts(n);
    for (const auto& w : PermutationRange(n, rank_lo, rank_hi)) {
        if (has_match(w, tau)) continue;
        counts.bump(lrmin_count(std::span<const int>(w)), 1 + descent_count(std::span<const int>(w)));
    }
    return counts.to_poly();
}

inline PolyXY brute_nm_poly(const Pattern& tau, int n) {
    return brute_nm_poly(tau, n, 0, factorial_u64(n));
}

/// Sum over sigma in S_n with no cycle-tau-match of x^{cyc(sigma)} y^{cdes(sigma)}.
inline PolyXY brute_ncm_poly(const Pattern& tau, int n, std::uint64_t rank_lo, std::uint64_t rank_hi) {
    if (n < 0) throw invalid_input("brute_ncm_poly: n must be >= 0");
    if (n == 0) return PolyXY(1);
    detail::CountTable counts(n);
    std::vector<char> used(static_cast<size_t>(n) + 1);
    std::vector<int> scratch, window;
    for (const auto& w : PermutationRange(n, rank_lo, rank_hi)) {
        bool matched = false;
        int cycles = 0, cd = 0;
        detail::for_each_cycle(w, used, scratch, [&](std::span<const int> cyc) {
            if (matched) return;
            if (detail::cycle_has_match(cyc, tau, window)) {
                matched = true;
                return;
            }
            ++cycles;
            cd += 1 + descent_count(cyc);
        });
        if (!matched) counts.bump(cycles, cd);
    }
    return counts.to_poly();
}

inline PolyXY brute_ncm_poly(const Pattern& tau, int n) {
    return brute_ncm_poly(tau, n, 0, factorial_u64(n));
}

/// Shard the rank space, run shards concurrently, merge by polynomial addition.
/// The merge is commutative and exact, so the result is shard-count independent.
template <typename BruteFn>
PolyXY brute_sharded(BruteFn&& fn, int n, unsigned shards) {
    const std::uint64_t total = factorial_u64(n);
    if (shards < 2 || n < 2 || total < shards) return fn(n, 0, total);
    std::vector<std::future<PolyXY>> parts;
    for (unsigned i = 0; i < shards; ++i) {
        const std::uint64_t lo = total / shards * i + std::min<std::uint64_t>(i, total % shards);
        const std::uint64_t hi = total / shards * (i + 1) + std::min<std::uint64_t>(i + 1, total % shards);
        parts.push_back(std::async(std::launch::async, [=, &fn] { return fn(n, lo, hi); }));
    }
    PolyXY sum;
    for (auto& part : parts) sum += part.get();
    return sum;
}

inline PolyXY brute_nm_poly_mt(const Pattern& tau, int n, unsigned shards) {
    return brute_sharded([&tau](int m, std::uint64_t lo, std::uint64_t hi) { return brute_nm_poly(tau, m, lo, hi); },
                         n, shards);
}

inline PolyXY brute_ncm_poly_mt(const Pattern& tau, int n, unsigned shards) {
    return brute_sharded([&tau](int m, std::uint64_t lo, std::uint64_t hi) { return brute_ncm_poly(tau, m, lo, hi); },
                         n, shards);
}

/// An ordered tiling of a 1 x n row by bricks.
struct BrickTabloid {
    std::vector<int> bricks;  // lengths, left to right
    int n = 0;

    BrickTabloid(std::vector<int> bricks_, int n_) : bricks(std::move(bricks_)), n(n_) {
        int sum = 0;
        for (int b : bricks) {
            if (b < 1) throw invalid_input("BrickTabloid: brick lengths must be >= 1");
            sum += b;
        }
        if (sum != n) throw invalid_input("BrickTabloid: brick lengths must sum to n");
    }

    int brick_count() const { return static_cast<int>(bricks.size()); }
    bool operator==(const BrickTabloid&) const = default;
};

/// Number of orderings of the brick multiset `lambda` tiling a 1 x n row
/// (0 unless the lengths sum to n).
inline BigInt brick_tabloid_count(std::vector<int> lambda, int n) {
    int sum = 0;
    for (int b : lambda) {
        if (b < 1) throw invalid_input("brick_tabloid_count: brick lengths must be >= 1");
        sum += b;
    }
    if (sum != n) return 0;
    std::sort(lambda.begin(), lambda.end());
    BigInt count = factorial(static_cast<int>(lambda.size()));
    size_t i = 0;
    while (i < lambda.size()) {
        size_t j = i;
        while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
        count /= factorial(static_cast<int>(j - i));
        i = j;
    }
    return count;
}

/// A brick tabloid of shape (n) filled with a set partition of {1..n}:
/// brick i holds a tau-match-free arrangement of its value set. Cells that
/// start a descent inside a brick carry a y label; the last cell of each
/// brick carries a -y label. sign = (-1)^{#bricks}, weight = y^{#labels}.
struct FilledObject {
    std::vector<int> bricks;  // composition of n, left to right
    std::vector<int> word;    // concatenated brick arrangements

    int size() const { return static_cast<int>(word.size()); }
    int brick_count() const { return static_cast<int>(bricks.size()); }
    BrickTabloid tabloid() const { return BrickTabloid(bricks, size()); }

    /// 1-based cell index of the first cell of brick b (0-based brick index).
    int brick_start(int b) const {
        int s = 1;
        for (int i = 0; i < b; ++i) s += bricks[static_cast<size_t>(i)];
        return s;
    }
    int brick_end(int b) const { return brick_start(b) + bricks[static_cast<size_t>(b)] - 1; }

    int value_at(int cell) const { return word[static_cast<size_t>(cell - 1)]; }

    int label_count() const {
        int labels = brick_count();
        for (int b = 0; b < brick_count(); ++b)
            for (int c = brick_start(b); c < brick_end(b); ++c)
                if (value_at(c) > value_at(c + 1)) ++labels;
        return labels;
    }

    int sign() const { return brick_count() % 2 == 0 ? 1 : -1; }

    PolyY signed_weight() const { return PolyY::monomial(label_count(), BigRational(sign())); }

    bool operator==(const FilledObject&) const = default;
};

namespace detail {

inline void enumerate_fills(const Pattern& tau, std::vector<int>& pool, FilledObject& partial,
                            std::vector<FilledObject>& out) {
    if (pool.empty()) {
        out.push_back(partial);
        return;
    }
    const int remaining = static_cast<int>(pool.size());
    std::vector<int> chosen, rest, arrangement;
    for (int b = 1; b <= remaining; ++b) {
        // every size-b subset of the pool, as sorted index combinations
        std::vector<int> idx(static_cast<size_t>(b));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            chosen.clear();
            rest.clear();
            for (int i = 0, k = 0; i < remaining; ++i) {
                if (k < b && idx[static_cast<size_t>(k)] == i) {
                    chosen.push_back(pool[static_cast<size_t>(i)]);
                    ++k;
                } else {
                    rest.push_back(pool[static_cast<size_t>(i)]);
                }
            }
            arrangement = chosen;  // sorted; next_permutation walks all orders
            do {
                if (!has_match(arrangement, tau)) {
                    partial.bricks.push_back(b);
                    partial.word.insert(partial.word.end(), arrangement.begin(), arrangement.end());
                    std::swap(pool, rest);
                    enumerate_fills(tau, pool, partial, out);
                    std::swap(pool, rest);
                    partial.word.resize(partial.word.size() - static_cast<size_t>(b));
                    partial.bricks.pop_back();
                }
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
            // advance the combination
            int k = b - 1;
            while (k >= 0 && idx[static_cast<size_t>(k)] == remaining - b + k) --k;
            if (k < 0) break;
            ++idx[static_cast<size_t>(k)];
            for (int t = k + 1; t < b; ++t) idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
        }
    }
}

}  // namespace detail

/// All filled objects on n cells for a pattern that starts with 1 and has one
/// descent. Counts grow like 2^{n-1} n!, so n is capped by `bound`.
inline std::vector<FilledObject> enumerate_objects(const Pattern& tau, int n, int bound = kDefaultObjectBound) {
    if (!tau.starts_with_one() || tau.descents() != 1)
        throw invalid_input("enumerate_objects: pattern must start with 1 and have exactly one descent");
    if (n < 0) throw invalid_input("enumerate_objects: n must be >= 0");
    if (n > bound)
        throw resource_limit("enumerate_objects: n = " + std::to_string(n) + " exceeds bound " +
                             std::to_string(bound));
    std::vector<FilledObject> out;
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    FilledObject partial;
    detail::enumerate_fills(tau, pool, partial, out);
    return out;
}

/// One step of the sign-reversing involution: scan cells left to right and
/// apply the first possible action. A cell labeled y (it starts a descent
/// inside its brick) splits the brick there; a brick-final cell that exceeds
/// the first value of the next brick combines the two bricks, provided the
/// union of their cells has no tau-match. Returns the object unchanged when
/// no action applies (a fixed point).
inline FilledObject involution(const FilledObject& o, const Pattern& tau) {
    const int n = o.size();
    int b = 0;
    for (int c = 1; c <= n; ++c) {
        while (c > o.brick_end(b)) ++b;
        const int end = o.brick_end(b);
        if (c < end && o.value_at(c) > o.value_at(c + 1)) {
            FilledObject r = o;
            const int start = o.brick_start(b);
            r.bricks[static_cast<size_t>(b)] = c - start + 1;
            r.bricks.insert(r.bricks.begin() + b + 1, end - c);
            return r;
        }
        if (c == end && b + 1 < o.brick_count() && o.value_at(c) > o.value_at(c + 1)) {
            const int start = o.brick_start(b);
            const int next_end = o.brick_end(b + 1);
            std::span<const int> joint(o.word.data() + start - 1, static_cast<size_t>(next_end - start + 1));
            if (!has_match(joint, tau)) {
                FilledObject r = o;
                r.bricks[static_cast<size_t>(b)] += r.bricks[static_cast<size_t>(b + 1)];
                r.bricks.erase(r.bricks.begin() + b + 1);
                return r;
            }
        }
    }
    return o;
}

/// Fixed-point structure: bricks increasing, brick minima increasing left to
/// right, and every adjacent brick pair either rises at the boundary or the
/// drop is justified by a tau-match within the union of the two bricks.
struct FixedPointProperties {
    bool bricks_increasing = false;
    bool minima_increasing = false;
    bool adjacent_ok = false;
    bool all() const { return bricks_increasing && minima_increasing && adjacent_ok; }
};

inline FixedPointProperties fixed_point_check(const FilledObject& o, const Pattern& tau) {
    FixedPointProperties props;
    props.bricks_increasing = true;
    for (int b = 0; b < o.brick_count(); ++b)
        for (int c = o.brick_start(b); c < o.brick_end(b); ++c)
            if (o.value_at(c) > o.value_at(c + 1)) props.bricks_increasing = false;
    props.minima_increasing = true;
    int prev_min = 0;
    for (int b = 0; b < o.brick_count(); ++b) {
        int mn = o.value_at(o.brick_start(b));
        for (int c = o.brick_start(b); c <= o.brick_end(b); ++c) mn = std::min(mn, o.value_at(c));
        if (mn < prev_min) props.minima_increasing = false;
        prev_min = mn;
    }
    props.adjacent_ok = true;
    for (int b = 0; b + 1 < o.brick_count(); ++b) {
        const int end = o.brick_end(b);
        if (o.value_at(end) < o.value_at(end + 1)) continue;
        const int start = o.brick_start(b);
        const int next_end = o.brick_end(b + 1);
        std::span<const int> joint(o.word.data() + start - 1, static_cast<size_t>(next_end - start + 1));
        if (!has_match(joint, tau)) props.adjacent_ok = false;
    }
    return props;
}

/// n! theta_tau(h_n), computed literally from the brick-tabloid expansion:
/// sum over partitions mu of n, over tabloid arrangements (b_1..b_l), of
/// (-1)^l multinomial(n; b) prod_i NM_{tau,b_i}(1,y), with brute-force factors.
inline PolyY theta_h(const Pattern& tau, int n, int bound = kDefaultOracleBound) {
    if (n < 0) throw invalid_input("theta_h: n must be >= 0");
    if (n > bound)
        throw resource_limit("theta_h: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    if (n == 0) return PolyY(1);
    std::vector<PolyY> nm(static_cast<size_t>(n) + 1);
    for (int b = 1; b <= n; ++b) nm[static_cast<size_t>(b)] = brute_nm_poly(tau, b).substitute_x(1);

    PolyY total;
    std::vector<int> part;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            std::vector<int> arrangement = part;  // nondecreasing; walk all orderings
            std::sort(arrangement.begin(), arrangement.end());
            do {
                PolyY prod = PolyY::monomial(0, BigRational(multinomial(n, arrangement)));
                for (int b : arrangement) prod = prod * nm[static_cast<size_t>(b)];
                if (arrangement.size() % 2 != 0) prod = -prod;
                total += prod;
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            part.push_back(p);
            self(self, remaining - p, p);
            part.pop_back();
        }
    };
    rec(rec, n, n);
    return total;
}

/// EGF (PolyY coefficients, order N) of single m-cycles with no cyclic
/// tau-match, weighted y^{cdes}; the m = 0 term is 0.
inline EgfSeries<PolyY> cycle_nm_egf(const Pattern& tau, int order) {
    EgfSeries<PolyY> m(order);
    std::vector<int> window;
    for (int len = 1; len <= order; ++len) {
        PolyY acc;
        // every len-cycle written min-first is 1 followed by a permutation of 2..len
        std::vector<int> word(static_cast<size_t>(len));
        std::iota(word.begin(), word.end(), 1);
        do {
            if (!detail::cycle_has_match(word, tau, window))
                acc.add_term(1 + descent_count(std::span<const int>(word)), 1);
        } while (std::next_permutation(word.begin() + 1, word.end()));
        m.at(len) = acc;
    }
    return m;
}

/// Lattice path of up/down steps staying weakly above the axis.
class DyckPath {
  public:
    enum class Step : std::uint8_t { Up, Down };

    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
        int height = 0;
        for (Step s : steps_) {
            height += s == Step::Up ? 1 : -1;
            if (height < 0) throw invalid_input("DyckPath: prefix dips below the axis");
        }
        if (height != 0) throw invalid_input("DyckPath: unbalanced steps");
    }

    static DyckPath from_string(const std::string& s) {
        std::vector<Step> steps;
        for (char c : s) {
            if (c == 'U' || c == 'u')
                steps.push_back(Step::Up);
            else if (c == 'D' || c == 'd')
                steps.push_back(Step::Down);
            else
                throw invalid_input("DyckPath: steps must be U or D");
        }
        return DyckPath(std::move(steps));
    }

    const std::vector<Step>& steps() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }

    std::string str() const {
        std::string s;
        for (Step st : steps_) s += st == Step::Up ? 'U' : 'D';
        return s;
    }

    bool operator==(const DyckPath&) const = default;

  private:
    std::vector<Step> steps_;
};

/// All Dyck paths of length 2k-2 (the k = 1 case is the single empty path).
inline std::vector<DyckPath> all_dyck_paths(int k) {
    if (k < 1) throw invalid_input("all_dyck_paths: k must be >= 1");
    const int half = k - 1;
    std::vector<DyckPath> out;
    std::vector<DyckPath::Step> path;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == half && downs == half) {
            out.emplace_back(path);
            return;
        }
        if (ups < half) {
            path.push_back(DyckPath::Step::Up);
            self(self, ups + 1, downs);
            path.pop_back();
        }
        if (downs < ups) {
            path.push_back(DyckPath::Step::Down);
            self(self, ups, downs + 1);
            path.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Label the steps of a Dyck path of length 2k-2 with 2..2k-1 and read off the
/// interleaved sequence c_1 d_1 ... c_k d_k: c_1 = 1, the up-step labels give
/// c_2..c_k, the down-step labels give d_1..d_{k-1}, and d_k = 2k.
inline std::vector<int> phi(const DyckPath& path) {
    const int len = path.length();
    if (len % 2 != 0) throw invalid_input("phi: path length must be even");
    const int k = len / 2 + 1;
    std::vector<int> c{1}, d;
    for (int i = 0; i < len; ++i)
        (path.steps()[static_cast<size_t>(i)] == DyckPath::Step::Up ? c : d).push_back(i + 2);
    d.push_back(2 * k);
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
        seq.push_back(c[static_cast<size_t>(i)]);
        seq.push_back(d[static_cast<size_t>(i)]);
    }
    return seq;
}

/// Inverse of phi. The sequence must satisfy: c_1 = 1, c_2 = 2, d_k = 2k, the
/// values are exactly {1..2k}, and every adjacent quadruple c_i d_i c_{i+1}
/// d_{i+1} reduces to 1324 (checked by explicit window reduction).
inline DyckPath phi_inverse(std::span<const int> seq) {
    if (seq.size() < 2 || seq.size() % 2 != 0) throw invalid_input("phi_inverse: sequence length must be even, >= 2");
    const int k = static_cast<int>(seq.size()) / 2;
    if (seq[0] != 1) throw invalid_input("phi_inverse: c_1 must be 1");
    if (k >= 2 && seq[2] != 2) throw invalid_input("phi_inverse: c_2 must be 2");
    if (seq.back() != 2 * k) throw invalid_input("phi_inverse: d_k must be 2k");
    std::vector<char> seen(static_cast<size_t>(2 * k) + 1, 0);
    for (int v : seq) {
        if (v < 1 || v > 2 * k || seen[static_cast<size_t>(v)])
            throw invalid_input("phi_inverse: values must be exactly 1..2k");
        seen[static_cast<size_t>(v)] = 1;
    }
    static const Pattern kQuad(std::vector<int>{1, 3, 2, 4});
    for (int i = 0; i + 1 < k; ++i)
        if (!kQuad.window_matches(seq.subspan(static_cast<size_t>(2 * i), 4)))
            throw invalid_input("phi_inverse: quadruple " + std::to_string(i + 1) + " does not reduce to 1324");
    std::vector<char> is_up(static_cast<size_t>(2 * k) + 1, 0);
    for (int i = 1; i < k; ++i) is_up[static_cast<size_t>(seq[static_cast<size_t>(2 * i)])] = 1;
    std::vector<DyckPath::Step> steps;
    for (int label = 2; label <= 2 * k - 1; ++label)
        steps.push_back(is_up[static_cast<size_t>(label)] ? DyckPath::Step::Up : DyckPath::Step::Down);
    return DyckPath(std::move(steps));
}

inline DyckPath phi_inverse(const std::vector<int>& seq) { return phi_inverse(std::span<const int>(seq)); }

}  // namespace cpav
