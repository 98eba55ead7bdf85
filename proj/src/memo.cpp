#include "winv/memo.hpp"

#include "winv/error.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <unordered_set>

namespace winv {

namespace {

// keys being evaluated on this thread; re-entry means the schedule loops
thread_local std::unordered_set<std::string> in_progress;

struct InProgress {
    const std::string& key;
    explicit InProgress(const std::string& k) : key(k) {
        if (!in_progress.insert(key).second)
            throw SchedulingError("recursion cycle at " + key);
    }
    ~InProgress() { in_progress.erase(key); }
    InProgress(const InProgress&) = delete;
    InProgress& operator=(const InProgress&) = delete;
};

const std::string kHeader = "#winv-cache v1 ";

}  // namespace

bool MemoStore::lookup(const std::string& key, Rational& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
}

void MemoStore::insert(const std::string& key, const Rational& value) {
    std::unique_lock lock(mu_);
    auto [it, fresh] = map_.emplace(key, value);
    if (!fresh && it->second != value)
        throw CorruptionError("conflicting values for " + key + ": " + it->second.str() +
                              " vs " + value.str());
}

Rational MemoStore::get_or_compute(const std::string& key, const Compute& compute) {
    Rational v;
    if (lookup(key, v)) return v;
    {
        InProgress guard(key);
        v = compute();
    }
    insert(key, v);
    return v;
}

std::size_t MemoStore::size() const {
    std::shared_lock lock(mu_);
    return map_.size();
}

void MemoStore::clear() {
    std::unique_lock lock(mu_);
    map_.clear();
}

std::vector<std::pair<std::string, Rational>> MemoStore::records() const {
    std::vector<std::pair<std::string, Rational>> out;
    {
        std::shared_lock lock(mu_);
        out.assign(map_.begin(), map_.end());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::size_t MemoStore::save(const std::string& path) const {
    auto recs = records();
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw Error("cannot write cache file " + path);
    os << kHeader << kEngineVersion << '\n';
    for (const auto& [k, v] : recs) os << k << '\t' << v.str() << '\n';
    if (!os) throw Error("write failed for " + path);
    return recs.size();
}

std::size_t MemoStore::load(const std::string& path, bool force) {
    std::ifstream is(path);
    if (!is) throw Error("cannot read cache file " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind(kHeader, 0) != 0)
        throw ParseError(path + ":1: missing cache header");
    std::string version = line.substr(kHeader.size());
    if (version != kEngineVersion && !force)
        throw ParseError(path + ": cache written by engine version " + version +
                         ", expected " + kEngineVersion);
    std::vector<std::pair<std::string, Rational>> recs;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw ParseError(path + ":" + std::to_string(lineno) + ": malformed record");
        try {
            recs.emplace_back(line.substr(0, tab), Rational::parse(line.substr(tab + 1)));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    for (const auto& [k, v] : recs) insert(k, v);
    return recs.size();
}

}  // namespace winv
