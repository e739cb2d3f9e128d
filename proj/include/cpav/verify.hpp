#pragma once

#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cpav/closedforms.hpp"
#include "cpav/families.hpp"
#include "cpav/golden.hpp"
#include "cpav/oracle.hpp"
#include "cpav/polynomial.hpp"
#include "cpav/series.hpp"

namespace cpav {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the verification suites. Brute-force polynomials are memoized across
/// criteria and sharded over threads; merges are deterministic, so repeated
/// runs produce identical results.
class Verifier {
  public:
    explicit Verifier(unsigned threads = std::thread::hardware_concurrency())
        : threads_(threads == 0 ? 1 : threads) {}

    static const std::map<std::string, std::vector<int>>& suites() {
        static const std::map<std::string, std::vector<int>> kSuites{
            {"tables", {1, 2}},     {"oracle", {3, 4, 5, 9}}, {"involution", {6}},
            {"dyck", {7}},          {"closedforms", {8}},     {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
        };
        return kSuites;
    }

    std::vector<CriterionResult> run_suite(const std::string& suite) {
        auto it = suites().find(suite);
        if (it == suites().end()) throw invalid_input("unknown verify suite: " + suite);
        std::vector<CriterionResult> results;
        for (int id : it->second) results.push_back(run_criterion(id));
        return results;
    }

    CriterionResult run_criterion(int id) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = id;
        switch (id) {
            case 1: r = golden_u_tables(); break;
            case 2: r = golden_nm_series(); break;
            case 3: r = oracle_equivalence(); break;
            case 4: r = cycle_linear_equivalence(); break;
            case 5: r = exponential_structure(); break;
            case 6: r = involution_suite(); break;
            case 7: r = dyck_bijection(); break;
            case 8: r = closed_forms(); break;
            case 9: r = integral_family(); break;
            case 10: r = full_scale(); break;
            default: throw invalid_input("unknown criterion id " + std::to_string(id));
        }
        r.id = id;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (id <= 9) ran_[id] = r.pass;
        return r;
    }

  private:
    unsigned threads_;
    std::map<std::string, PolyXY> brute_memo_;
    std::map<int, bool> ran_;

    const PolyXY& nm(const Pattern& tau, int n) {
        const std::string key = tau.canonical() + "|" + std::to_string(n) + "|nm";
        auto it = brute_memo_.find(key);
        if (it == brute_memo_.end()) it = brute_memo_.emplace(key, brute_nm_poly_mt(tau, n, threads_)).first;
        return it->second;
    }

    const PolyXY& ncm(const Pattern& tau, int n) {
        const std::string key = tau.canonical() + "|" + std::to_string(n) + "|ncm";
        auto it = brute_memo_.find(key);
        if (it == brute_memo_.end()) it = brute_memo_.emplace(key, brute_ncm_poly_mt(tau, n, threads_)).first;
        return it->second;
    }

    static CriterionResult fail(std::string name, std::string detail) {
        return CriterionResult{0, std::move(name), false, std::move(detail), 0.0};
    }
    static CriterionResult ok(std::string name, std::string detail) {
        return CriterionResult{0, std::move(name), true, std::move(detail), 0.0};
    }

    CriterionResult golden_u_tables() {
        const std::string name = "golden U tables (4 families, n = 1..11)";
        for (size_t f = 0; f < golden::family_labels.size(); ++f) {
            UTable table = u_coeffs(Identity132p(golden::family_p[f]), 11);
            for (int n = 1; n <= 11; ++n) {
                const PolyY want = parse_poly_y(std::string(golden::u_tables[f][static_cast<size_t>(n - 1)]));
                if (!(table.at(n) == want))
                    return fail(name, "U_{" + std::string(golden::family_labels[f]) + "," + std::to_string(n) +
                                          "} = " + format_poly(table.at(n)) + ", table says " + format_poly(want));
            }
        }
        return ok(name, "44 polynomials exact");
    }

    CriterionResult golden_nm_series() {
        const std::string name = "golden NM series coefficients through t^8";
        for (size_t f = 0; f < golden::family_labels.size(); ++f) {
            EgfSeries<PolyXY> s = nm_series(Identity132p(golden::family_p[f]), 8);
            for (int n = 0; n <= 8; ++n) {
                const PolyXY want = parse_poly_xy(std::string(golden::nm_series[f][static_cast<size_t>(n)]));
                if (!(s.at(n) == want))
                    return fail(name, "NM_{" + std::string(golden::family_labels[f]) + "} t^" + std::to_string(n) +
                                          " = " + format_poly(s.at(n)) + ", published " + format_poly(want));
            }
        }
        return ok(name, "36 coefficients exact");
    }

    std::vector<std::pair<std::string, PatternFamily>> oracle_families() const {
        return {
            {"1324", PatternFamily(Identity132p(4))},
            {"13245", PatternFamily(Identity132p(5))},
            {"132456", PatternFamily(Identity132p(6))},
            {"1423", PatternFamily(OneP2(4))},
            {"13425", PatternFamily(Fuss(5))},
            {"132", PatternFamily(EndsInTwo(parse_pattern("132")))},
            {"1243", PatternFamily(MiddleGamma(parse_pattern("1243")))},
        };
    }

    CriterionResult oracle_equivalence() {
        const std::string name = "recursion pipeline equals brute force (7 patterns, n <= 9)";
        for (const auto& [label, family] : oracle_families()) {
            const Pattern tau = family_pattern(family);
            EgfSeries<PolyXY> s = nm_series(family, 9);
            for (int n = 0; n <= 9; ++n) {
                if (!(s.at(n) == nm(tau, n)))
                    return fail(name, label + " at n = " + std::to_string(n) + ": recursion " +
                                          format_poly(s.at(n)) + " vs brute " + format_poly(nm(tau, n)));
            }
        }
        return ok(name, "70 coefficients exact");
    }

    CriterionResult cycle_linear_equivalence() {
        const std::string name = "cycle statistics equal linear statistics when tau starts with 1";
        for (const std::string label : {"1324", "13245", "132", "1243"}) {
            const Pattern tau = parse_pattern(label);
            for (int n = 0; n <= 8; ++n)
                if (!(ncm(tau, n) == nm(tau, n)))
                    return fail(name, label + " at n = " + std::to_string(n) + ": cycle poly differs");
        }
        const Pattern odd = parse_pattern("3142");
        const BigRational c = ncm(odd, 7).eval(1, 1);
        const BigRational l = nm(odd, 7).eval(1, 1);
        if (ncm(odd, 7) == nm(odd, 7)) return fail(name, "3142 at n = 7: polynomials should differ");
        if (c != 4236 || l != 4237)
            return fail(name,
                        "polynomial equality for the four patterns and the 3142 inequality both hold, but the "
                        "published totals (4236, 4237) are not reproduced: cyclic-window matching gives (" +
                            format_poly(PolyY(c)) + ", " + format_poly(PolyY(l)) +
                            "); no reading of the cycle-match definition consistent with its worked example and "
                            "the start-with-1 equivalence yields 4236");
        return ok(name, "equal for 4 patterns to n = 8; 3142 splits 4236 vs 4237");
    }

    CriterionResult exponential_structure() {
        const std::string name = "cycle EGF exponentiates to the full cycle-statistic EGF (1324, order 7)";
        const Pattern tau = parse_pattern("1324");
        EgfSeries<PolyXY> lhs(7);
        for (int n = 0; n <= 7; ++n) lhs.at(n) = ncm(tau, n);
        EgfSeries<PolyXY> rhs = series_exp_symbolic_x(cycle_nm_egf(tau, 7));
        for (int n = 0; n <= 7; ++n)
            if (!(lhs.at(n) == rhs.at(n)))
                return fail(name, "order " + std::to_string(n) + ": exp of cycle EGF " + format_poly(rhs.at(n)) +
                                      " vs brute " + format_poly(lhs.at(n)));
        return ok(name, "exact through order 7");
    }

    CriterionResult involution_suite() {
        const std::string name = "involution suite (1324 and 13245, objects to n = 6, theta to n = 7)";
        for (int p : {4, 5}) {
            const PatternFamily family{Identity132p(p)};
            const Pattern tau = family_pattern(family);
            UTable table = u_coeffs(family, 7);
            for (int n = 1; n <= 6; ++n) {
                std::vector<FilledObject> objects = enumerate_objects(tau, n);
                PolyY total, fixed_total;
                for (const FilledObject& o : objects) {
                    const FilledObject img = involution(o, tau);
                    if (!(involution(img, tau) == o))
                        return fail(name, "involution not self-inverse at p = " + std::to_string(p) +
                                              ", n = " + std::to_string(n));
                    const PolyY w = o.signed_weight();
                    total += w;
                    if (img == o) {
                        fixed_total += w;
                        const FixedPointProperties props = fixed_point_check(o, tau);
                        if (!props.all())
                            return fail(name, "fixed point fails structure check at p = " + std::to_string(p) +
                                                  ", n = " + std::to_string(n));
                    } else if (!(w + img.signed_weight()).is_zero()) {
                        return fail(name, "paired objects fail to cancel at p = " + std::to_string(p) +
                                              ", n = " + std::to_string(n));
                    }
                }
                if (!(total == table.at(n)) || !(fixed_total == table.at(n)))
                    return fail(name, "signed sums disagree with U at p = " + std::to_string(p) +
                                          ", n = " + std::to_string(n) + ": all " + format_poly(total) +
                                          ", fixed " + format_poly(fixed_total) + ", U " + format_poly(table.at(n)));
            }
            for (int n = 1; n <= 7; ++n)
                if (!(theta_h(tau, n) == table.at(n)))
                    return fail(name, "theta_h differs from U at p = " + std::to_string(p) +
                                          ", n = " + std::to_string(n));
        }
        return ok(name, "involution, cancellation, fixed-point structure, signed sums, theta all exact");
    }

    CriterionResult dyck_bijection() {
        const std::string name = "Dyck labeling bijection (k <= 8)";
        for (int k = 1; k <= 8; ++k) {
            const std::vector<DyckPath> paths = all_dyck_paths(k);
            if (BigInt(paths.size()) != catalan(k - 1))
                return fail(name, "path count at k = " + std::to_string(k) + " is not Catalan");
            std::set<std::vector<int>> image;
            for (const DyckPath& path : paths) {
                const std::vector<int> seq = phi(path);
                if (!(phi_inverse(seq) == path))
                    return fail(name, "phi_inverse(phi(P)) != P at k = " + std::to_string(k) + " for " + path.str());
                image.insert(seq);
            }
            if (BigInt(image.size()) != catalan(k - 1))
                return fail(name, "image size at k = " + std::to_string(k) + " is not Catalan");
            // The quadruple condition forces both subsequences to increase, so every
            // admissible sequence is determined by its set of c-values.
            std::set<std::vector<int>> admissible;
            std::vector<int> pool;
            for (int v = 3; v <= 2 * k - 1; ++v) pool.push_back(v);
            std::vector<char> take(pool.size(), 0);
            std::fill(take.begin(), take.begin() + (k - 2 > 0 ? k - 2 : 0), 1);
            std::sort(take.begin(), take.end());
            do {
                std::vector<int> cs{1};
                if (k >= 2) cs.push_back(2);
                std::vector<char> used(static_cast<size_t>(2 * k) + 1, 0);
                used[1] = 1;
                if (k >= 2) used[2] = 1;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (take[i]) {
                        cs.push_back(pool[i]);
                        used[static_cast<size_t>(pool[i])] = 1;
                    }
                std::vector<int> ds;
                for (int v = 1; v <= 2 * k; ++v)
                    if (!used[static_cast<size_t>(v)]) ds.push_back(v);
                std::vector<int> seq;
                for (int i = 0; i < k; ++i) {
                    seq.push_back(cs[static_cast<size_t>(i)]);
                    seq.push_back(ds[static_cast<size_t>(i)]);
                }
                bool valid = seq.back() == 2 * k;
                static const Pattern kQuad(std::vector<int>{1, 3, 2, 4});
                for (int i = 0; valid && i + 1 < k; ++i)
                    valid = kQuad.window_matches(std::span<const int>(seq).subspan(static_cast<size_t>(2 * i), 4));
                if (valid) admissible.insert(seq);
            } while (std::next_permutation(take.begin(), take.end()));
            if (admissible != image)
                return fail(name, "admissible sequences differ from the phi image at k = " + std::to_string(k));
        }
        return ok(name, "round trip, image characterization, Catalan counts for k = 1..8");
    }

    CriterionResult closed_forms() {
        const std::string name = "closed forms for one and two descents (p = 4..7)";
        if (d1(4, 5) != 11) return fail(name, "d1(4, 5) = " + d1(4, 5).str() + ", expected 11");
        for (int p = 4; p <= 7; ++p) {
            const Pattern tau = family_pattern(Identity132p(p));
            const EgfSeries<BigRational> s1 = d_series(p, 1, 14);
            const EgfSeries<BigRational> s2 = d_series(p, 2, 14);
            for (int n = p - 1; n <= 14; ++n)
                if (s1.at(n) != BigRational(d1(n, p)))
                    return fail(name, "one-descent series vs closed form at p = " + std::to_string(p) +
                                          ", n = " + std::to_string(n));
            const int lo2 = p == 4 ? 5 : 2 * p - 2;
            for (int n = lo2; n <= 14; ++n)
                if (s2.at(n) != BigRational(d2(n, p)))
                    return fail(name, "two-descent series vs closed form at p = " + std::to_string(p) +
                                          ", n = " + std::to_string(n));
            for (int n = 0; n <= 9; ++n) {
                const PolyY b = nm(tau, n).substitute_x(1);
                if (s1.at(n) != b.coefficient(2) || s2.at(n) != b.coefficient(3))
                    return fail(name, "series slices vs brute force at p = " + std::to_string(p) +
                                          ", n = " + std::to_string(n));
            }
            for (int n = 1; n <= 9; ++n) {
                const IdentityReport rep = coeff_identities(p, n);
                if (!rep.all_pass()) {
                    for (const auto& chk : rep.checks)
                        if (!chk.pass)
                            return fail(name, "identity '" + chk.name + "' fails at p = " + std::to_string(p) +
                                                  ", n = " + std::to_string(n) + " (" + chk.detail + ")");
                }
            }
        }
        return ok(name, "series slices, closed forms, brute force and coefficient identities agree");
    }

    CriterionResult integral_family() {
        const std::string name = "integral construction for 132 matches the brute-force reciprocal (order 9)";
        UTable table = u_coeffs(EndsInTwo(parse_pattern("132")), 9);
        const Pattern tau = parse_pattern("132");
        EgfSeries<PolyY> nm_series_1y(9);
        for (int n = 0; n <= 9; ++n) nm_series_1y.at(n) = nm(tau, n).substitute_x(1);
        EgfSeries<PolyY> recip = series_reciprocal(nm_series_1y);
        for (int n = 0; n <= 9; ++n)
            if (!(table.at(n) == recip.at(n)))
                return fail(name, "order " + std::to_string(n) + ": integral " + format_poly(table.at(n)) +
                                      " vs reciprocal " + format_poly(recip.at(n)));
        return ok(name, "exact through order 9");
    }

    CriterionResult full_scale() {
        const std::string name = "all published claims reproduced at full stated scale";
        std::ostringstream detail;
        detail << "bounds: U tables n <= 11, NM series t^8, oracle n <= 9, cycle n <= 8, "
                  "exp structure order 7, objects n <= 6 with theta n <= 7, Dyck k <= 8, "
                  "closed forms n <= 14 vs brute n <= 9, integral order 9";
        bool pass = true;
        for (int id = 1; id <= 9; ++id) {
            auto it = ran_.find(id);
            if (it == ran_.end() || !it->second) pass = false;
        }
        if (!pass) detail << "; a prerequisite criterion did not pass";
        return CriterionResult{10, name, pass, detail.str(), 0.0};
    }
};

inline std::vector<CriterionResult> run_verification(const std::string& suite,
                                                     unsigned threads = std::thread::hardware_concurrency()) {
    Verifier v(threads);
    return v.run_suite(suite);
}

}  // namespace cpav
