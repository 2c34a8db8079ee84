#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rc/canonical.hpp"
#include "rc/rng.hpp"

using namespace rc;

namespace {

EdgeColoring relabel(const EdgeColoring& c, const std::vector<int>& perm) {
    EdgeColoring out(c.n(), c.t());
    for (int u = 1; u <= c.n(); ++u)
        for (int v = u + 1; v <= c.n(); ++v)
            out.set_color(perm[u - 1], perm[v - 1], c.color(u, v));
    return out;
}

// All t^C(n,2) colorings, no symmetry reduction.
void for_each_raw(int n, int t, const std::function<void(const EdgeColoring&)>& fn) {
    EdgeColoring c(n, t);
    auto& cols = c.colors();
    for (;;) {
        fn(c);
        std::size_t i = 0;
        while (i < cols.size() && cols[i] == t) cols[i++] = 1;
        if (i == cols.size()) break;
        ++cols[i];
    }
}

std::size_t quotient_count(int n, int t, SymmetryMode mode) {
    std::set<std::vector<uint8_t>> codes;
    for_each_raw(n, t, [&](const EdgeColoring& c) {
        codes.insert(canonical_code(c, mode).code);
    });
    return codes.size();
}

std::size_t enumerated_count(int n, int t, SymmetryMode mode) {
    std::size_t count = 0;
    enumerate_colorings(n, t, mode, {0, 1}, uint64_t(1) << 40,
                        [&](const EdgeColoring&) { ++count; });
    return count;
}

}  // namespace

TEST_CASE("code is invariant under vertex relabeling") {
    std::mt19937_64 rng(17);
    for (int sample = 0; sample < 5; ++sample) {
        int n = 4 + int(bounded_random(rng, 4));
        int t = 2 + int(bounded_random(rng, 2));
        auto c = random_coloring(n, t, rng);
        auto base = canonical_code(c, SymmetryMode::VertexOnly);
        auto base_vc = canonical_code(c, SymmetryMode::VertexAndColor);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        for (int rep = 0; rep < 100; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            auto r = relabel(c, perm);
            CHECK(canonical_code(r, SymmetryMode::VertexOnly) == base);
            CHECK(canonical_code(r, SymmetryMode::VertexAndColor) == base_vc);
        }
    }
}

TEST_CASE("vertex-and-color mode identifies color swaps") {
    std::mt19937_64 rng(23);
    auto c = random_coloring(6, 2, rng);
    EdgeColoring swapped(6, 2);
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v)
            swapped.set_color(u, v, 3 - c.color(u, v));
    CHECK(canonical_code(c, SymmetryMode::VertexAndColor) ==
          canonical_code(swapped, SymmetryMode::VertexAndColor));
}

TEST_CASE("vertex-only mode keeps color identity") {
    EdgeColoring one(4, 2), two(4, 2);
    for (auto& x : two.colors()) x = 2;
    CHECK(canonical_code(one, SymmetryMode::VertexOnly) !=
          canonical_code(two, SymmetryMode::VertexOnly));
}

TEST_CASE("size limit enforced") {
    CHECK_THROWS(canonical_code(EdgeColoring(13, 2), SymmetryMode::VertexOnly));
}

TEST_CASE("known class counts") {
    CHECK(enumerated_count(3, 2, SymmetryMode::VertexOnly) == 4);
    CHECK(enumerated_count(2, 3, SymmetryMode::VertexAndColor) == 1);
    CHECK(enumerated_count(3, 2, SymmetryMode::VertexAndColor) == 2);
}

TEST_CASE("enumeration matches brute-force quotient counts") {
    struct Job {
        int n, t;
    };
    for (Job j : {Job{3, 2}, Job{3, 3}, Job{3, 4}, Job{4, 2}, Job{4, 3},
                  Job{4, 4}, Job{5, 2}, Job{5, 3}}) {
        CAPTURE(j.n);
        CAPTURE(j.t);
        for (auto mode : {SymmetryMode::VertexOnly, SymmetryMode::VertexAndColor})
            CHECK(enumerated_count(j.n, j.t, mode) == quotient_count(j.n, j.t, mode));
    }
}

TEST_CASE("shards partition the class set") {
    for (auto mode : {SymmetryMode::VertexOnly, SymmetryMode::VertexAndColor}) {
        std::set<std::vector<uint8_t>> whole, sharded;
        enumerate_colorings(4, 3, mode, {0, 1}, uint64_t(1) << 40,
                            [&](const EdgeColoring& c) { whole.insert(c.colors()); });
        std::size_t total = 0;
        for (int i = 0; i < 4; ++i)
            enumerate_colorings(4, 3, mode, {i, 4}, uint64_t(1) << 40,
                                [&](const EdgeColoring& c) {
                                    ++total;
                                    sharded.insert(c.colors());
                                });
        CHECK(sharded == whole);
        CHECK(total == whole.size());  // disjoint: no class in two shards
    }
}

TEST_CASE("node budget refusal") {
    CHECK_THROWS(enumerate_colorings(8, 4, SymmetryMode::VertexOnly, {0, 1}, 1000,
                                     [](const EdgeColoring&) {}));
}

TEST_CASE("raw count") {
    CHECK(raw_coloring_count(3, 2) == 8);
    CHECK(raw_coloring_count(5, 3) == 59049);
    CHECK(raw_coloring_count(64, 9) == UINT64_MAX);
}
