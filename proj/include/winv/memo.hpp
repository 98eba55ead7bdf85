#pragma once

#include "winv/rational.hpp"

#include <cstddef>
#include <functional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace winv {

inline constexpr const char* kEngineVersion = "1";

// Thread-safe map from canonical key text to value.  Values are computed
// outside the lock; a key seen twice with different values is corruption.
class MemoStore {
public:
    using Compute = std::function<Rational()>;

    MemoStore() = default;
    MemoStore(const MemoStore&) = delete;
    MemoStore& operator=(const MemoStore&) = delete;

    Rational get_or_compute(const std::string& key, const Compute& compute);

    bool lookup(const std::string& key, Rational& out) const;
    void insert(const std::string& key, const Rational& value);

    std::size_t size() const;
    void clear();
    // sorted by key
    std::vector<std::pair<std::string, Rational>> records() const;

    std::size_t save(const std::string& path) const;
    std::size_t load(const std::string& path, bool force = false);

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, Rational> map_;
};

}  // namespace winv
