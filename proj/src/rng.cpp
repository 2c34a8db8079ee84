#include "rc/rng.hpp"

#include <stdexcept>

namespace rc {

uint64_t bounded_random(std::mt19937_64& rng, uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bounded_random: zero bound");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

EdgeColoring random_coloring(int n, int t, std::mt19937_64& rng) {
    EdgeColoring c(n, t);
    for (auto& col : c.colors())
        col = static_cast<uint8_t>(1 + bounded_random(rng, uint64_t(t)));
    return c;
}

EdgeColoring near_extremal_coloring(int n, int t, int flips, std::mt19937_64& rng) {
    // random composition of n into t nonnegative parts
    PartitionVector pv;
    pv.parts.assign(t, 0);
    for (int i = 0; i < n; ++i)
        ++pv.parts[bounded_random(rng, uint64_t(t))];
    EdgeColoring c = partition_coloring(pv);
    for (int i = 0; i < flips && c.pair_count() > 0; ++i) {
        std::size_t e = bounded_random(rng, c.pair_count());
        c.colors()[e] = static_cast<uint8_t>(1 + bounded_random(rng, uint64_t(t)));
    }
    return c;
}

Graph random_graph(int n, int num, int den, std::mt19937_64& rng) {
    if (den <= 0 || num < 0 || num > den)
        throw std::invalid_argument("random_graph: bad edge probability");
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (bounded_random(rng, uint64_t(den)) < uint64_t(num)) g.add_edge(u, v);
    return g;
}

}  // namespace rc
