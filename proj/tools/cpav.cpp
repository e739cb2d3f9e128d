// Command-line front end: compute U tables and NM series, run the brute-force
// oracle (optionally sharded and cached), and run the verification suites.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cpav/closedforms.hpp"
#include "cpav/families.hpp"
#include "cpav/json_io.hpp"
#include "cpav/oracle.hpp"
#include "cpav/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitResourceLimit = 4;
constexpr int kExitIo = 5;

using namespace cpav;

enum class Format { text, json, latex };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "latex") return Format::latex;
    throw invalid_input("unknown format '" + s + "' (expected text, json or latex)");
}

PatternFamily make_family(const std::string& name, std::optional<int> p, const std::string& pattern_str) {
    auto need_p = [&]() -> int {
        if (!p) throw invalid_input("family '" + name + "' needs --p");
        return *p;
    };
    auto need_pattern = [&]() -> Pattern {
        if (pattern_str.empty()) throw invalid_input("family '" + name + "' needs --pattern");
        return parse_pattern(pattern_str);
    };
    if (name == "1324..p" || name == "identity") return Identity132p(need_p());
    if (name == "1p2..p-1" || name == "one-p-2") return OneP2(need_p());
    if (name == "134..p-1,2,p" || name == "fuss") return Fuss(need_p());
    if (name == "ends-in-2") return EndsInTwo(need_pattern());
    if (name == "middle-gamma") return MiddleGamma(need_pattern());
    if (name == "generic") return Generic(need_pattern());
    throw invalid_input("unknown family '" + name +
                        "' (expected 1324..p, 1p2..p-1, fuss, ends-in-2, middle-gamma or generic)");
}

std::string family_label(const PatternFamily& family) { return family_pattern(family).str(); }

void check_order(int n, int max_order) {
    if (n > max_order)
        throw resource_limit("order " + std::to_string(n) + " exceeds --max-order " + std::to_string(max_order) +
                             "; raise it explicitly if you mean it");
    if (n > kDefaultSeriesOrder)
        std::cerr << "warning: order " << n << " is above the default limit " << kDefaultSeriesOrder
                  << "; expect slower exact arithmetic\n";
}

int cmd_u(const PatternFamily& family, int n, Format format, int max_order) {
    if (n < 1) throw invalid_input("u: --n must be >= 1");
    check_order(n, max_order);
    UTable table = u_coeffs(family, n);
    if (format == Format::json) {
        std::cout << series_to_json(table.series()).dump(2) << "\n";
        return kExitOk;
    }
    const std::string label = family_label(family);
    for (int k = 1; k <= n; ++k) {
        if (format == Format::latex)
            std::cout << "U_{" << label << "," << k << "}(y) = " << format_poly(table.at(k), true) << "\n";
        else
            std::cout << "U_{" << k << "}(y) = " << format_poly(table.at(k)) << "\n";
    }
    return kExitOk;
}

int cmd_series(const PatternFamily& family, int order, Format format, int max_order) {
    if (order < 0) throw invalid_input("series: --order must be >= 0");
    check_order(order, max_order);
    EgfSeries<PolyXY> s = nm_series(family, order);
    if (format == Format::json) {
        std::cout << series_to_json(s).dump(2) << "\n";
        return kExitOk;
    }
    const std::string label = family_label(family);
    std::cout << "NM_{" << label << "}(t,x,y) coefficients of t^n/n!:\n";
    for (int n = 0; n <= order; ++n) {
        if (format == Format::latex)
            std::cout << "n=" << n << ": " << format_poly(s.at(n), true) << "\n";
        else
            std::cout << "n=" << n << ": " << format_poly(s.at(n)) << "\n";
    }
    return kExitOk;
}

struct BruteOptions {
    std::string pattern;
    int n = 0;
    bool cycle = false;
    unsigned shards = 1;
    int shard = -1;  // when >= 0: compute only this shard's rank range
    std::string cache_dir;
    bool no_cache = false;
    int max_n = kDefaultOracleBound;
};

std::filesystem::path cache_path(const BruteOptions& opt, const Pattern& tau) {
    const std::string name = tau.canonical() + "__n" + std::to_string(opt.n) + (opt.cycle ? "__cycle" : "__linear") +
                             ".json";
    return std::filesystem::path(opt.cache_dir) / name;
}

PolyXY load_cached_poly(const std::filesystem::path& path, const BruteOptions& opt, const Pattern& tau) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read cache file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("cache file " + path.string() + " is not valid JSON: " + e.what());
    }
    if (j.value("pattern", "") != tau.canonical() || j.value("n", -1) != opt.n || j.value("cycle", !opt.cycle) != opt.cycle)
        throw io_error("cache file " + path.string() + " does not match the requested computation");
    return poly_from_json(j.at("poly"));
}

void store_cached_poly(const std::filesystem::path& path, const BruteOptions& opt, const Pattern& tau,
                       const PolyXY& poly) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (!out) throw io_error("cannot write cache file " + path.string());
    nlohmann::json j{{"pattern", tau.canonical()}, {"n", opt.n}, {"cycle", opt.cycle}, {"poly", poly_to_json(poly)}};
    out << j.dump(2) << "\n";
    if (!out) throw io_error("failed writing cache file " + path.string());
}

int cmd_brute(const BruteOptions& opt, Format format, unsigned threads) {
    const Pattern tau = parse_pattern(opt.pattern);
    if (opt.n < 0) throw invalid_input("brute: --n must be >= 0");
    if (opt.n > opt.max_n)
        throw resource_limit("brute: n = " + std::to_string(opt.n) + " exceeds --max-n " + std::to_string(opt.max_n) +
                             " (" + std::to_string(factorial_u64(opt.n)) + " permutations); raise --max-n if you mean it");
    if (opt.n > kDefaultOracleBound)
        std::cerr << "warning: n = " << opt.n << " is above the default oracle bound " << kDefaultOracleBound << "\n";

    const bool single_shard = opt.shard >= 0;
    if (single_shard && (opt.shards < 1 || static_cast<unsigned>(opt.shard) >= opt.shards))
        throw invalid_input("brute: --shard must be in [0, --shards)");

    PolyXY poly;
    bool from_cache = false;
    const bool cacheable = !opt.cache_dir.empty() && !single_shard;
    if (cacheable && !opt.no_cache && std::filesystem::exists(cache_path(opt, tau))) {
        poly = load_cached_poly(cache_path(opt, tau), opt, tau);
        from_cache = true;
    } else if (single_shard) {
        const std::uint64_t total = factorial_u64(opt.n);
        const std::uint64_t lo = total / opt.shards * opt.shard + std::min<std::uint64_t>(opt.shard, total % opt.shards);
        const std::uint64_t hi =
            total / opt.shards * (opt.shard + 1) + std::min<std::uint64_t>(opt.shard + 1, total % opt.shards);
        poly = opt.cycle ? brute_ncm_poly(tau, opt.n, lo, hi) : brute_nm_poly(tau, opt.n, lo, hi);
    } else {
        poly = opt.cycle ? brute_ncm_poly_mt(tau, opt.n, threads) : brute_nm_poly_mt(tau, opt.n, threads);
    }

    if (cacheable && !from_cache) {
        const auto path = cache_path(opt, tau);
        if (opt.no_cache && std::filesystem::exists(path)) {
            const PolyXY cached = load_cached_poly(path, opt, tau);
            if (!(cached == poly)) {
                std::cerr << "cache validation failed: " << path << " disagrees with recomputation\n";
                return kExitVerifyFailed;
            }
        } else if (!opt.no_cache) {
            store_cached_poly(path, opt, tau, poly);
        }
    }

    if (format == Format::json) {
        std::cout << poly_to_json(poly).dump(2) << "\n";
        return kExitOk;
    }
    const char* kind = opt.cycle ? "NCM" : "NM";
    std::cout << kind << "_{" << tau.str() << "," << opt.n << "}(x,y) = "
              << format_poly(poly, format == Format::latex) << "\n";
    if (!single_shard) std::cout << "at x=y=1: " << format_poly(PolyY(poly.eval(1, 1))) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, unsigned threads) {
    Verifier verifier(threads);
    const std::vector<CriterionResult> results = verifier.run_suite(suite);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s criterion %d: %s (%s) [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    return all ? kExitOk : kExitVerifyFailed;
}

int cmd_dyck(int k, int max_k) {
    if (k < 1) throw invalid_input("dyck: --k must be >= 1");
    if (k > max_k)
        throw resource_limit("dyck: k = " + std::to_string(k) + " exceeds --max-k " + std::to_string(max_k));
    const std::vector<DyckPath> paths = all_dyck_paths(k);
    for (const DyckPath& path : paths) {
        const std::vector<int> seq = phi(path);
        std::cout << (path.length() ? path.str() : "(empty)") << " -> ";
        for (size_t i = 0; i < seq.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << seq[i];
        }
        std::cout << "\n";
    }
    std::cout << paths.size() << " paths\n";
    return kExitOk;
}

int cmd_descents(int p, int k, int n, int max_order) {
    if (k != 1 && k != 2) throw invalid_input("descents: --k must be 1 or 2");
    if (n < 0) throw invalid_input("descents: --n must be >= 0");
    const bool closed = k == 1 ? n >= p - 1 : (p == 4 ? n >= 5 : n >= 2 * p - 2);
    BigInt value;
    if (closed) {
        value = k == 1 ? d1(n, p) : d2(n, p);
    } else {
        check_order(n, max_order);
        const BigRational v = d_series(p, k, std::max(n, 1)).at(n);
        value = boost::multiprecision::numerator(v);
    }
    std::cout << "d^(" << k << ")_{" << n << "," << p << "} = " << value.str()
              << "  (method: " << (closed ? "closed form" : "series extraction") << ")\n";
    return kExitOk;
}

int cmd_identities(int p, int n, int max_order) {
    check_order(n, max_order);
    const IdentityReport report = coeff_identities(p, n);
    for (const auto& chk : report.checks)
        std::cout << (chk.pass ? "ok   " : "FAIL ") << chk.name << (chk.pass ? "" : "  [" + chk.detail + "]") << "\n";
    std::cout << (report.all_pass() ? "all identities hold" : "some identities FAILED") << " for p = " << p
              << ", n = " << n << "\n";
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating functions for permutations avoiding consecutive patterns"};
    app.require_subcommand(1);

    std::string family_name_opt = "1324..p";
    std::optional<int> p_opt;
    std::string pattern_opt;
    std::string format_opt = "text";
    int max_order = kDefaultSeriesOrder;
    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;

    auto add_family_opts = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_name_opt,
                        "family: 1324..p, 1p2..p-1, fuss, ends-in-2, middle-gamma, generic");
        cmd->add_option("--p", p_opt, "pattern length parameter for the parametric families");
        cmd->add_option("--pattern", pattern_opt, "explicit pattern, e.g. 132 or 1,3,2,4");
    };

    auto* u_cmd = app.add_subcommand("u", "print U_{tau,n}(y) for n = 1..N");
    int u_n = 0;
    add_family_opts(u_cmd);
    u_cmd->add_option("--n", u_n, "largest n")->required();
    u_cmd->add_option("--format", format_opt, "text, json or latex");
    u_cmd->add_option("--max-order", max_order, "resource cap on the series order");

    auto* series_cmd = app.add_subcommand("series", "print NM_tau(t,x,y) coefficients");
    int series_order = 0;
    add_family_opts(series_cmd);
    series_cmd->add_option("--order", series_order, "series order N")->required();
    series_cmd->add_option("--format", format_opt, "text, json or latex");
    series_cmd->add_option("--max-order", max_order, "resource cap on the series order");

    auto* brute_cmd = app.add_subcommand("brute", "brute-force oracle polynomial over S_n");
    BruteOptions brute;
    brute_cmd->add_option("--pattern", brute.pattern, "pattern, e.g. 1324 or 3,1,4,2")->required();
    brute_cmd->add_option("--n", brute.n, "permutation size")->required();
    brute_cmd->add_flag("--cycle", brute.cycle, "count cycle statistics over cycle-match-free permutations");
    brute_cmd->add_option("--shards", brute.shards, "number of rank-range shards");
    brute_cmd->add_option("--shard", brute.shard, "compute only this shard (0-based); output is partial");
    brute_cmd->add_option("--cache-dir", brute.cache_dir, "directory for result caching");
    brute_cmd->add_flag("--no-cache", brute.no_cache, "recompute and validate any existing cache entry");
    brute_cmd->add_option("--max-n", brute.max_n, "resource cap on n");
    brute_cmd->add_option("--format", format_opt, "text, json or latex");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite, "tables, oracle, involution, dyck, closedforms or all");
    verify_cmd->add_option("--threads", threads, "worker threads for brute-force shards");

    auto* dyck_cmd = app.add_subcommand("dyck", "list Dyck paths of length 2k-2 and their label sequences");
    int dyck_k = 0, max_k = 12;
    dyck_cmd->add_option("--k", dyck_k, "half-length parameter")->required();
    dyck_cmd->add_option("--max-k", max_k, "resource cap on k");

    auto* descents_cmd = app.add_subcommand("descents", "count permutations with no 1324..p-match and k descents");
    int des_p = 4, des_k = 1, des_n = 0;
    descents_cmd->add_option("--p", des_p, "pattern length")->required();
    descents_cmd->add_option("--k", des_k, "descent count (1 or 2)")->required();
    descents_cmd->add_option("--n", des_n, "permutation size")->required();
    descents_cmd->add_option("--max-order", max_order, "resource cap when the series path is needed");

    auto* ident_cmd = app.add_subcommand("identities", "check printed coefficient identities of NM_{1324..p,n}");
    int ident_p = 4, ident_n = 1;
    ident_cmd->add_option("--p", ident_p, "pattern length")->required();
    ident_cmd->add_option("--n", ident_n, "coefficient order")->required();
    ident_cmd->add_option("--max-order", max_order, "resource cap on the series order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Format format = parse_format(format_opt);
        if (u_cmd->parsed()) return cmd_u(make_family(family_name_opt, p_opt, pattern_opt), u_n, format, max_order);
        if (series_cmd->parsed())
            return cmd_series(make_family(family_name_opt, p_opt, pattern_opt), series_order, format, max_order);
        if (brute_cmd->parsed()) return cmd_brute(brute, format, threads);
        if (verify_cmd->parsed()) return cmd_verify(suite, threads);
        if (dyck_cmd->parsed()) return cmd_dyck(dyck_k, max_k);
        if (descents_cmd->parsed()) return cmd_descents(des_p, des_k, des_n, max_order);
        if (ident_cmd->parsed()) return cmd_identities(ident_p, ident_n, max_order);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
