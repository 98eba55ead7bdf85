#include "winv/error.hpp"
#include "winv/query.hpp"
#include "winv/session.hpp"
#include "winv/tables.hpp"
#include "winv/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>

namespace fs = std::filesystem;
using namespace winv;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScheduling = 3;
constexpr int kExitEngine = 4;

struct Globals {
    std::string cache_flag;
    bool no_cache = false;
};

// --cache, then WINV_CACHE, then ~/.cache/winv/winv.cache
std::optional<std::string> cache_path(const Globals& g) {
    if (g.no_cache) return std::nullopt;
    if (!g.cache_flag.empty()) return g.cache_flag;
    if (const char* env = std::getenv("WINV_CACHE"); env && *env) return std::string(env);
    if (const char* home = std::getenv("HOME"); home && *home)
        return (fs::path(home) / ".cache" / "winv" / "winv.cache").string();
    return std::nullopt;
}

void load_cache(Session& s, const std::optional<std::string>& path) {
    if (path && fs::exists(*path)) s.store().load(*path);
}

// written beside the target and renamed over it
void save_cache(const Session& s, const std::optional<std::string>& path) {
    if (!path) return;
    fs::path p(*path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    fs::path tmp = p;
    tmp += ".tmp";
    s.store().save(tmp.string());
    fs::rename(tmp, p);
}

std::vector<int> parse_table_ids(const std::vector<std::string>& ids) {
    std::vector<int> out;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
        for (int n = 1; n <= kTableCount; ++n) out.push_back(n);
        return out;
    }
    for (std::string id : ids) {
        if (!id.empty() && (id[0] == 'T' || id[0] == 't')) id.erase(0, 1);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(id, &used);
            if (used != id.size()) n = 0;
        } catch (const std::exception&) {
        }
        if (n < 1 || n > kTableCount)
            throw UsageError("unknown table '" + id + "' (1.." + std::to_string(kTableCount) + ")");
        out.push_back(n);
    }
    return out;
}

int run_compute(const Globals& g, Query q, const std::string& format) {
    validate(q);
    Session s;
    auto path = cache_path(g);
    load_cache(s, path);
    const std::string key = canonical_key(q);
    Rational v;
    try {
        v = evaluate(s, q);
    } catch (const SchedulingError& e) {
        std::cerr << "scheduling error at " << key << ": " << e.what() << "\n";
        return kExitScheduling;
    }
    save_cache(s, path);
    if (format == "json")
        std::cout << to_json(q, v).dump() << "\n";
    else if (format == "csv")
        std::cout << "value,key\n" << v.str() << ",\"" << key << "\"\n";
    else
        std::cout << v.str() << "\t" << key << "\n";
    return 0;
}

int run_table(const Globals& g, const std::vector<std::string>& ids, const std::string& format,
              const std::string& out_dir, const std::string& diff_dir) {
    auto numbers = parse_table_ids(ids);
    Session s;
    auto path = cache_path(g);
    load_cache(s, path);
    long mismatches = 0;
    nlohmann::json all = nlohmann::json::array();
    for (int n : numbers) {
        Table t = build_table(s, n);
        if (!diff_dir.empty()) {
            auto diff = compare_tables(read_csv_file((fs::path(diff_dir) / table_file_name(n)).string()), t);
            for (const auto& m : diff)
                std::cout << "T" << n << " " << m.row << " " << m.column << ": expected " << m.expected
                          << ", got " << m.actual << "\n";
            std::cout << table_file_name(n) << (diff.empty() ? " ok" : " MISMATCH") << "\n";
            mismatches += static_cast<long>(diff.size());
            continue;
        }
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            fs::path file = fs::path(out_dir) / table_file_name(n);
            if (format == "json") file.replace_extension(".json");
            std::ofstream os(file, std::ios::binary | std::ios::trunc);
            if (format == "json")
                os << render_json(t).dump(2) << "\n";
            else
                os << render_csv(t);
            if (!os) throw Error("cannot write " + file.string());
        } else if (format == "json") {
            all.push_back(render_json(t));
        } else {
            if (numbers.size() > 1) std::cout << "# " << table_file_name(n) << "\n";
            std::cout << render_csv(t);
            if (numbers.size() > 1) std::cout << "\n";
        }
    }
    if (diff_dir.empty() && out_dir.empty() && format == "json")
        std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    save_cache(s, path);
    return mismatches == 0 ? 0 : kExitMismatch;
}

int run_verify(const std::string& suite, const std::string& golden) {
    VerifyConfig cfg;
    cfg.golden_dir = golden;
    auto checks = run_suite(suite, cfg);
    long failed = 0;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << c.name << " " << c.detail
                  << " [" << std::fixed << std::setprecision(2) << c.seconds << "s]\n";
        if (!c.pass) ++failed;
    }
    std::cout << checks.size() - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : kExitMismatch;
}

int run_cache(const Globals& g, const std::string& action) {
    auto path = cache_path(g);
    if (!path) throw UsageError("no cache location (use --cache or WINV_CACHE)");
    if (action == "clear") {
        bool removed = fs::remove(*path);
        std::cout << (removed ? "removed " : "nothing at ") << *path << "\n";
        return 0;
    }
    std::cout << "path: " << *path << "\n";
    if (!fs::exists(*path)) {
        std::cout << "records: 0 (no file)\n";
        return 0;
    }
    MemoStore m;
    m.load(*path);
    std::map<std::string, long> by_family;
    for (const auto& [key, v] : m.records()) {
        auto cut = key.find('|', key.find('|') + 1);
        ++by_family[key.substr(0, cut)];
    }
    std::cout << "records: " << m.size() << "\n";
    for (const auto& [fam, n] : by_family) std::cout << "  " << fam << "  " << n << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus-0 Gromov-Witten and Welschinger invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--cache", g.cache_flag, "memo cache file (default $WINV_CACHE or ~/.cache/winv/winv.cache)");
    app.add_flag("--no-cache", g.no_cache, "neither read nor write a cache file");

    auto* compute = app.add_subcommand("compute", "evaluate one invariant");
    Query q;
    std::string space, real, format = "text";
    std::vector<long> degree;
    compute->add_option("--space", space, "p2, p1p1, blowup, p3 or p1cubed")->required();
    compute->add_option("--real", real,
                        "involution: tau2 | twisted, product | real | tau3 | phi3, phi3' (omit for complex)");
    compute->add_option("-d,--degree", degree, "class, comma separated where it has several entries")
        ->required()
        ->delimiter(',');
    compute->add_option("-l,--pairs", q.pairs, "conjugate pairs of points (surfaces)");
    compute->add_option("-m,--insert", q.insertions, "insertions: 3,2 on P3; 110,111 on (P1)^3; 21,11 twisted")
        ->delimiter(',');
    compute->add_option("--a", q.a, "blowup multiplicities at real points")->delimiter(',');
    compute->add_option("--b", q.b, "blowup multiplicities at conjugate pairs")->delimiter(',');
    compute->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json", "csv"}));

    auto* table = app.add_subcommand("table", "regenerate tables");
    std::vector<std::string> ids;
    std::string tformat = "csv", out_dir, diff_dir;
    table->add_option("ids", ids, "table numbers (T1..T20) or all; default all");
    table->add_option("--format", tformat, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_dir, "write one file per table into this directory");
    table->add_option("--diff", diff_dir, "compare with Tnn.csv files in this directory instead of printing");

    auto* verify = app.add_subcommand("verify", "run property suites");
    std::string suite = "all", golden = "golden";
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(choices));
    verify->add_option("--golden", golden, "directory with reference Tnn.csv files");

    auto* cache = app.add_subcommand("cache", "inspect or clear the memo cache");
    std::string action = "inspect";
    cache->add_option("action", action, "inspect or clear")->check(CLI::IsMember({"inspect", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) {
            q.space = parse_space(space);
            q.involution = real;
            q.degree.assign(degree.begin(), degree.end());
            return run_compute(g, q, format);
        }
        if (*table) return run_table(g, ids, tformat, out_dir, diff_dir);
        if (*verify) return run_verify(suite, golden);
        if (*cache) return run_cache(g, action);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SchedulingError& e) {
        std::cerr << "scheduling error: " << e.what() << "\n";
        return kExitScheduling;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngine;
    }
    return 0;
}
