#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leaky/cache.hpp"
#include "leaky/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace leaky;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("leaky-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter()
    {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("profile json round trip")
{
    const auto p = make_profile(1, {5, -1, -1}, 1);
    CHECK(profile_from_json(profile_to_json(p)) == p);
    const Json j = profile_to_json(p);
    CHECK(j["entries"] == Json::array({5, -1, -1}));
}

TEST_CASE("cover json round trip and schema")
{
    const auto profile = make_profile(1, {5, -1, -1}, 1);
    for (const LeakyCover& c : enumerate_covers(profile)) {
        const Json j = cover_to_json(c);
        CHECK(j.contains("vertices"));
        CHECK(j.contains("edges"));
        CHECK(j.contains("ends"));
        CHECK(j["multiplicity"].is_string());
        const LeakyCover back = cover_from_json(j);
        CHECK(back == c);
    }
}

TEST_CASE("fock vector json round trip")
{
    FockVector v;
    v[make_partition({3, 1})] = Rational(-7, 2);
    v[make_partition({2, 2, 1})] = Rational(5);
    v[Partition{}] = Rational(1, 3);
    CHECK(fock_from_json(fock_to_json(v)) == v);
}

TEST_CASE("polynomial json round trip")
{
    MultivariatePolynomial p;
    p.nvars = 2;
    p.add_term({3, 0}, Rational(1, 12));
    p.add_term({1, 1}, Rational(-2));
    p.add_term({0, 0}, Rational(7, 5));
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
}

TEST_CASE("wall json round trip")
{
    Wall w{{1, 3}, 1, 3, WallVariant::theorem_printed};
    const Wall back = wall_from_json(wall_to_json(w));
    CHECK(back == w);
}

TEST_CASE("rationals are strings on the wire, never decimals")
{
    const Json j = fock_to_json({{Partition{2}, Rational(1, 2)}});
    for (const auto& [key, value] : j.items()) {
        CHECK(value.is_string());
        CHECK(value.get<std::string>() == "1/2");
    }
}

TEST_CASE("cache store and lookup")
{
    TempDir tmp;
    CacheStore cache(tmp.path.string());
    const auto profile = make_profile(1, {3, -3}, 0);

    // cold cache
    CHECK(!cache.lookup(profile, "enumerate", ""));

    cache.store(ComputationRecord{profile, "enumerate", "", Rational(2)});
    auto hit = cache.lookup(profile, "enumerate", "");
    REQUIRE(hit);
    CHECK(hit->value == 2);
    CHECK(hit->version == kArtifactVersion);
    CHECK(!hit->timestamp.empty());

    // other keys unaffected
    CHECK(!cache.lookup(profile, "fock", "labeled"));
    CHECK(!cache.lookup(make_profile(1, {4, -2}, 1), "enumerate", ""));
}

TEST_CASE("cache is append-only and the newest record wins")
{
    TempDir tmp;
    CacheStore cache(tmp.path.string());
    const auto profile = make_profile(1, {4, -2}, 1);

    ComputationRecord first{profile, "fock", "labeled", Rational(2)};
    first.timestamp = "2026-01-01T00:00:00Z";
    cache.store(first);

    ComputationRecord second{profile, "fock", "labeled", Rational(2)};
    second.timestamp = "2026-01-02T00:00:00Z";
    cache.store(second);

    // a version bump appends without rewriting anything
    ComputationRecord bumped{profile, "fock", "labeled", Rational(2)};
    bumped.version = "9.9.9";
    cache.store(bumped);

    auto hit = cache.lookup(profile, "fock", "labeled");
    REQUIRE(hit);
    CHECK(hit->timestamp == "2026-01-02T00:00:00Z");
    auto hit2 = cache.lookup(profile, "fock", "labeled", "9.9.9");
    REQUIRE(hit2);

    // history is retained line by line
    std::ifstream in(cache.path());
    int lines = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            ++lines;
    CHECK(lines == 3);
}

TEST_CASE("cli binary smoke tests")
{
    auto run = [](const std::string& cmd) {
        std::string full = "./leaky " + cmd + " 2>/dev/null";
        FILE* pipe = popen(full.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string output;
        char buf[512];
        while (fgets(buf, sizeof buf, pipe))
            output += buf;
        const int status = pclose(pipe);
        return std::pair(WEXITSTATUS(status), output);
    };

    auto [code, out] = run("count -g 1 -x 3,-3 -k 0 --method fock");
    CHECK(code == 0);
    CHECK(out == "2\n");

    auto [code2, out2] = run("count -g 0 -x 2,-1 -k 1");
    CHECK(code2 == 1);  // degree mismatch

    auto [code3, out3] = run("count -g 1 -x 4,-2 -k 1 --json");
    CHECK(code3 == 0);
    const Json j = Json::parse(out3);
    CHECK(j["values"]["enumerate"] == "2");
    CHECK(j["values"]["fock"] == "2");
    CHECK(j["values"]["xgraph"] == "2");

    auto [code4, out4] = run("walls -g 0 -n 4 -k 1 --signs ++--");
    CHECK(code4 == 0);
    CHECK(out4 == "x1+x3 = 1\nx1+x4 = 1\n");

    auto [code5, out5] = run("crosscheck --max-genus 0 --max-n 3 --max-entry 3 --leaks 0,1");
    CHECK(code5 == 0);

    TempDir tmp;
    auto [code6, out6] =
        run("count -g 1 -x 3,-3 -k 0 --method enumerate --cache-dir " +
            tmp.path.string());
    CHECK(code6 == 0);
    CHECK(out6 == "2\n");
    auto [code7, out7] =
        run("cache --action lookup -g 1 -x 3,-3 -k 0 --method enumerate "
            "--cache-dir " +
            tmp.path.string());
    CHECK(code7 == 0);
    CHECK(out7 == "2\n");
    // cached and cold runs print the same result
    auto [code8, out8] =
        run("count -g 1 -x 3,-3 -k 0 --method enumerate --cache-dir " +
            tmp.path.string());
    CHECK(code8 == 0);
    CHECK(out8 == out6);
}
