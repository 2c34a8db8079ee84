#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rc/matching.hpp"
#include "rc/rng.hpp"

using namespace rc;

namespace {

Graph star4() {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace

TEST_CASE("blossom on small graphs") {
    CHECK(max_matching_size(Graph::complete(4)) == 2);
    CHECK(max_matching_size(star4()) == 1);
    CHECK(max_matching_size(Graph(5)) == 0);
    CHECK(max_matching_size(path(5)) == 2);
    // odd cycle forces a blossom
    Graph c5(5);
    for (int i = 1; i <= 5; ++i) c5.add_edge(i, i % 5 + 1);
    CHECK(max_matching_size(c5) == 2);
    // Petersen graph: perfect matching
    Graph pete(10);
    for (int i = 0; i < 5; ++i) {
        pete.add_edge(i + 1, (i + 1) % 5 + 1);
        pete.add_edge(i + 1, i + 6);
        pete.add_edge(i + 6, (i + 2) % 5 + 6);
    }
    CHECK(max_matching_size(pete) == 5);
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_max_matching_size(Graph(5)) == 0);
    CHECK(brute_force_max_matching_size(Graph::complete(3)) == 1);
    CHECK(brute_force_max_matching_size(path(5)) == 2);
    CHECK(brute_force_max_matching(path(5)).size() == 2);
    CHECK_THROWS(brute_force_max_matching_size(Graph(15)));
}

TEST_CASE("blossom agrees with the oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + int(bounded_random(rng, 11));
        Graph g = random_graph(n, 1, 2, rng);
        CAPTURE(iter);
        CHECK(max_matching_size(g) == brute_force_max_matching_size(g));
    }
}

TEST_CASE("max_matching returns the lex-least maximum matching") {
    auto m = max_matching(Graph::complete(4));
    CHECK(m.edges == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(is_valid_matching(Graph::complete(4), m));
    auto ms = max_matching(star4());
    CHECK(ms.edges == std::vector<Edge>{{1, 2}});
    // sparse n=8 graph vs the oracle
    std::mt19937_64 rng(42);
    Graph g(8);
    while (g.edge_count() < 12) {
        int u = 1 + int(bounded_random(rng, 8));
        int v = 1 + int(bounded_random(rng, 8));
        if (u != v) g.add_edge(u, v);
    }
    CHECK(max_matching(g).size() == brute_force_max_matching(g).size());
}

TEST_CASE("deficiency") {
    CHECK(deficiency(Graph::complete(4)) == 0);
    CHECK(deficiency(star4()) == 2);
    CHECK(deficiency(path(3)) == 1);
}

TEST_CASE("berge witness on forced cases") {
    auto w4 = berge_witness(Graph::complete(4));
    CHECK(w4.x_set.empty());
    CHECK(w4.deficiency == 0);
    auto ws = berge_witness(star4());
    CHECK(ws.x_set == std::vector<int>{1});
    CHECK(ws.odd_components == 3);
    CHECK(ws.deficiency == 2);
}

TEST_CASE("berge witness attains the exhaustive maximum") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 3 + int(bounded_random(rng, 8));
        Graph g = random_graph(n, 1, 3, rng);
        auto w = berge_witness(g);
        CHECK(w.deficiency == deficiency(g));
        // exhaustive X sweep: no subset does better
        int best = 0;
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            std::vector<int> x;
            for (int v = 1; v <= n; ++v)
                if ((mask >> (v - 1)) & 1) x.push_back(v);
            best = std::max(best,
                            odd_component_count(g, x) - static_cast<int>(x.size()));
        }
        CHECK(best == w.deficiency);
    }
}
