#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rc/coloring.hpp"
#include "rc/matching.hpp"
#include "rc/rng.hpp"

using namespace rc;

namespace {

// Color class of color c as a spanning subgraph of K_n.
Graph color_class(const EdgeColoring& c, int col) {
    Graph g(c.n());
    for (int u = 1; u <= c.n(); ++u)
        for (int v = u + 1; v <= c.n(); ++v)
            if (c.color(u, v) == col) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("partition coloring follows the min-j rule") {
    auto c = partition_coloring({{1, 3}});
    CHECK(c.n() == 4);
    CHECK(c.color(1, 2) == 1);
    CHECK(c.color(1, 3) == 1);
    CHECK(c.color(1, 4) == 1);
    CHECK(c.color(2, 3) == 2);
    CHECK(c.color(2, 4) == 2);
    CHECK(c.color(3, 4) == 2);

    auto c1 = partition_coloring({{4}});
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) CHECK(c1.color(u, v) == 1);

    auto c3 = partition_coloring({{1, 2, 5}});
    CHECK(c3.color(2, 3) == 2);
    CHECK(c3.color(4, 8) == 3);

    CHECK_THROWS(partition_coloring({{0, 0}}));
}

TEST_CASE("min-j rule holds for random partition vectors") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 50; ++iter) {
        int t = 1 + int(bounded_random(rng, 4));
        PartitionVector pv;
        pv.parts.resize(t, 0);
        int n = 0;
        for (int j = 0; j < t; ++j) {
            pv.parts[j] = int(bounded_random(rng, 4));
            n += pv.parts[j];
        }
        if (n < 2) continue;
        // block index of each vertex
        std::vector<int> block(n + 1);
        int v = 1;
        for (int j = 0; j < t; ++j)
            for (int i = 0; i < pv.parts[j]; ++i) block[v++] = j + 1;
        auto c = partition_coloring(pv);
        for (int u = 1; u <= n; ++u)
            for (int w = u + 1; w <= n; ++w)
                CHECK(c.color(u, w) == std::min(block[u], block[w]));
    }
}

TEST_CASE("extremal main coloring") {
    CHECK(extremal_main_parts(2, 2).parts == std::vector<int>{1, 3});
    CHECK(extremal_main_parts(3, 4).parts == std::vector<int>{1, 2, 5});
    // degenerate zero-part case: all edges end up in the last color
    auto pv = extremal_main_parts(3, 3);
    CHECK(pv.parts == std::vector<int>{0, 0, 5});
    auto c = extremal_main_coloring(3, 3);
    CHECK(c.n() == 5);
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) CHECK(c.color(u, v) == 3);
    CHECK_THROWS(extremal_main_coloring(1, 3));
}

TEST_CASE("extremal main part sums and nonnegative remainder") {
    for (int t = 2; t <= 6; ++t)
        for (int k = 1; k <= 20; ++k) {
            auto pv = extremal_main_parts(t, k);
            int p = (k - 1) / ((1 << (t - 1)) - 1);
            CHECK(pv.total() == 2 * k - 1 + p);
            CHECK(pv.parts.back() >= 0);
        }
}

TEST_CASE("cockayne-lorimer coloring") {
    auto a = cockayne_lorimer_coloring(2, 1);
    CHECK(a == partition_coloring({{1, 3}}));
    auto b = cockayne_lorimer_coloring(3, 2);
    CHECK(b.n() == 9);
    CHECK(b == partition_coloring({{2, 2, 5}}));
    // [3,7] on K_10: every color class has matching number exactly 3
    auto d = cockayne_lorimer_coloring(2, 3);
    CHECK(d.n() == 10);
    CHECK(max_matching_size(color_class(d, 1)) == 3);
    CHECK(max_matching_size(color_class(d, 2)) == 3);
    CHECK_THROWS(cockayne_lorimer_coloring(2, 0));
}

TEST_CASE("nb crossing rules") {
    auto a3 = nb_crossing_assignment(3);
    REQUIRE(a3.crossing.size() == 3);
    CHECK(a3.crossing[EdgeColoring::pair_index(3, 1, 2)] == 3);
    CHECK(a3.crossing[EdgeColoring::pair_index(3, 1, 3)] == 2);
    CHECK(a3.crossing[EdgeColoring::pair_index(3, 2, 3)] == 1);
    CHECK(!a3.searched);
    CHECK(nb_rules_hold(3, a3.crossing));

    for (int t = 3; t <= 8; ++t) {
        auto a = nb_crossing_assignment(t);
        CAPTURE(t);
        CHECK(nb_rules_hold(t, a.crossing));
        CHECK(a.searched == (t % 2 == 0));
    }
}

TEST_CASE("nb coloring") {
    auto c = nb_coloring(3, 3);
    CHECK(c.n() == 9);
    CHECK(c.color(1, 2) == 1);   // inside part 1
    CHECK(c.color(4, 5) == 2);   // inside part 2
    CHECK(c.color(1, 4) == 3);   // parts 1,2
    CHECK(c.color(2, 9) == 2);   // parts 1,3
    CHECK(c.color(6, 7) == 1);   // parts 2,3

    auto k3 = nb_coloring(3, 1);
    CHECK(k3.color(1, 2) == 3);
    CHECK(k3.color(1, 3) == 2);
    CHECK(k3.color(2, 3) == 1);

    CHECK(validate(nb_coloring(4, 2)).empty());
    CHECK_THROWS(nb_coloring(2, 3));
}

TEST_CASE("validate diagnostics") {
    auto c = partition_coloring({{2, 2}});
    CHECK(validate(c).empty());
    c.colors()[EdgeColoring::pair_index(4, 1, 3)] = 3;  // out of 1..2
    auto diags = validate(c);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("(1,3)") != std::string::npos);
    c.colors().pop_back();
    CHECK(!validate(c).empty());
}

TEST_CASE("json round trip and errors") {
    std::mt19937_64 rng(5);
    auto c = random_coloring(6, 3, rng);
    CHECK(coloring_from_json_text(coloring_to_json_text(c)) == c);

    CHECK_THROWS_WITH_AS(
        coloring_from_json_text(R"({"n":3,"t":2,"colors":[1,2]})"),
        doctest::Contains("3"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        coloring_from_json_text(R"({"n":3,"t":2,"colors":[1,0,2]})"),
        doctest::Contains("color"), std::runtime_error);
    CHECK_THROWS(coloring_from_json_text("[]"));
}
