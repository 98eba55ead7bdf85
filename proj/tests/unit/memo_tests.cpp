#include <doctest.h>

#include "winv/error.hpp"
#include "winv/memo.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <thread>

using namespace winv;

namespace {

std::string temp_path(const char* tag) {
    return (std::filesystem::temp_directory_path() / (std::string("winv-unit-") + tag + ".cache")).string();
}

}  // namespace

TEST_CASE("values are computed once per key") {
    MemoStore m;
    int calls = 0;
    auto f = [&] { ++calls; return Rational(5, 3); };
    CHECK(m.get_or_compute("A|x|", f) == Rational(5, 3));
    CHECK(m.get_or_compute("A|x|", f) == Rational(5, 3));
    CHECK(calls == 1);
    Rational out;
    CHECK(m.lookup("A|x|", out));
    CHECK_FALSE(m.lookup("A|y|", out));
}

TEST_CASE("a key with two values is corruption") {
    MemoStore m;
    m.insert("K", 1);
    CHECK_NOTHROW(m.insert("K", 1));
    CHECK_THROWS_AS(m.insert("K", 2), CorruptionError);
}

TEST_CASE("save and load round trip in key order") {
    MemoStore m;
    m.insert("b|2", Rational(-7, 2));
    m.insert("a|1", 12);
    const auto path = temp_path("roundtrip");
    CHECK(m.save(path) == 2);

    std::ifstream is(path);
    std::string header, first;
    std::getline(is, header);
    std::getline(is, first);
    CHECK(header == std::string("#winv-cache v1 ") + kEngineVersion);
    CHECK(first == "a|1\t12");

    MemoStore n;
    CHECK(n.load(path) == 2);
    CHECK(n.records() == m.records());
    std::remove(path.c_str());
}

TEST_CASE("malformed cache files are rejected whole") {
    const auto path = temp_path("bad");
    {
        std::ofstream os(path);
        os << "#winv-cache v1 " << kEngineVersion << "\nok\t1\nbroken line\n";
    }
    MemoStore m;
    CHECK_THROWS_AS(m.load(path), ParseError);
    CHECK(m.size() == 0);
    {
        std::ofstream os(path);
        os << "#winv-cache v1 999\nok\t1\n";
    }
    CHECK_THROWS_AS(m.load(path), ParseError);
    CHECK(m.load(path, true) == 1);
    std::remove(path.c_str());
}

TEST_CASE("concurrent computes of one key agree") {
    MemoStore m;
    std::atomic<int> calls{0};
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&] {
            for (int k = 0; k < 200; ++k)
                m.get_or_compute("K|" + std::to_string(k % 10), [&, k] {
                    ++calls;
                    return Rational(k % 10);
                });
        });
    for (auto& t : threads) t.join();
    CHECK(m.size() == 10);
    CHECK(calls >= 10);
}

TEST_CASE("a key that needs itself is a scheduling error") {
    MemoStore m;
    std::function<Rational()> loop = [&] { return m.get_or_compute("L", loop); };
    CHECK_THROWS_AS(m.get_or_compute("L", loop), SchedulingError);
    CHECK(m.size() == 0);
    CHECK(m.get_or_compute("L", [] { return Rational(1); }) == Rational(1));
}
