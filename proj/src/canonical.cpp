#include "rc/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rc {

std::vector<uint8_t> colex_code(const EdgeColoring& c) {
    std::vector<uint8_t> out;
    out.reserve(c.pair_count());
    for (int v = 2; v <= c.n(); ++v)
        for (int u = 1; u < v; ++u)
            out.push_back(static_cast<uint8_t>(c.color(u, v)));
    return out;
}

namespace {

// Min-code search over vertex permutations. The code is built in colex
// order, so placing one more vertex appends one block of colors against
// the already-placed vertices; prefixes compare against the best code
// block by block.
struct CanonSearch {
    const EdgeColoring& c;
    const std::vector<int>& recolor;  // recolor[original color] = new color
    int n;
    std::vector<uint8_t> best;
    std::vector<int> perm;
    std::vector<char> used;
    std::vector<uint8_t> cur;

    CanonSearch(const EdgeColoring& col, const std::vector<int>& rc)
        : c(col), recolor(rc), n(col.n()) {
        perm.assign(n, 0);
        used.assign(n + 1, 0);
        cur.reserve(c.pair_count());
    }

    int color(int u, int v) const { return recolor[c.color(u, v)]; }

    void run() {
        // identity labeling seeds the bound
        best.clear();
        for (int v = 2; v <= n; ++v)
            for (int u = 1; u < v; ++u)
                best.push_back(static_cast<uint8_t>(color(u, v)));
        dfs(0, true);
    }

    void dfs(int depth, bool tight) {
        if (depth == n) {
            // best can shrink mid-search, so tight alone is not enough
            if (cur < best) best = cur;
            return;
        }
        std::size_t offset = cur.size();
        for (int w = 1; w <= n; ++w) {
            if (used[w]) continue;
            bool child_tight = tight;
            bool pruned = false;
            for (int i = 0; i < depth; ++i) {
                uint8_t col = static_cast<uint8_t>(color(perm[i], w));
                cur.push_back(col);
                if (child_tight) {
                    uint8_t ref = best[offset + i];
                    if (col > ref) {
                        pruned = true;
                        break;
                    }
                    if (col < ref) child_tight = false;
                }
            }
            if (!pruned) {
                used[w] = 1;
                perm[depth] = w;
                dfs(depth + 1, child_tight);
                used[w] = 0;
            }
            cur.resize(offset);
        }
    }
};

std::vector<uint8_t> vertex_min_code(const EdgeColoring& c,
                                     const std::vector<int>& recolor) {
    CanonSearch search(c, recolor);
    search.run();
    return search.best;
}

}  // namespace

CanonicalCode canonical_code(const EdgeColoring& c, SymmetryMode mode) {
    if (c.n() > kCanonicalLimit)
        throw std::invalid_argument("canonical_code: n exceeds canonicalization limit");
    std::vector<int> identity(c.t() + 1);
    std::iota(identity.begin(), identity.end(), 0);
    CanonicalCode out;
    out.mode = mode;
    if (mode == SymmetryMode::VertexOnly) {
        out.code = vertex_min_code(c, identity);
        return out;
    }
    if (c.t() > 8)
        throw std::invalid_argument("canonical_code: vertex-and-color mode limited to t <= 8");
    std::vector<int> sigma(identity.begin() + 1, identity.end());
    bool first = true;
    do {
        std::vector<int> recolor(c.t() + 1, 0);
        for (int i = 0; i < c.t(); ++i) recolor[i + 1] = sigma[i];
        auto code = vertex_min_code(c, recolor);
        if (first || code < out.code) {
            out.code = std::move(code);
            first = false;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

bool is_canonical(const EdgeColoring& c, SymmetryMode mode) {
    return canonical_code(c, mode).code == colex_code(c);
}

uint64_t shard_key(const CanonicalCode& code) {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (uint8_t b : code.code) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

uint64_t raw_coloring_count(int n, int t) {
    uint64_t m = uint64_t(n) * (n - 1) / 2;
    uint64_t total = 1;
    for (uint64_t i = 0; i < m; ++i) {
        if (total > UINT64_MAX / uint64_t(t)) return UINT64_MAX;
        total *= uint64_t(t);
    }
    return total;
}

void enumerate_colorings(int n, int t, SymmetryMode mode, Shard shard,
                         uint64_t node_budget,
                         const std::function<void(const EdgeColoring&)>& fn) {
    if (n < 2 || t < 1) throw std::invalid_argument("enumerate_colorings: need n >= 2, t >= 1");
    if (shard.total < 1 || shard.index < 0 || shard.index >= shard.total)
        throw std::invalid_argument("enumerate_colorings: bad shard");
    if (raw_coloring_count(n, t) > node_budget)
        throw std::runtime_error("enumerate_colorings: t^C(n,2) exceeds the node budget");
    std::size_t m = std::size_t(n) * (n - 1) / 2;
    EdgeColoring c(n, t);
    for (;;) {
        // cheap reject: in the canonical representative the colex-first
        // pair carries the minimum color (1 in vertex-and-color mode)
        int min_col = t;
        for (uint8_t col : c.colors()) min_col = std::min(min_col, int(col));
        int first = c.color(1, 2);
        bool maybe = mode == SymmetryMode::VertexAndColor ? (first == 1 && min_col == 1)
                                                          : (first == min_col);
        if (maybe && is_canonical(c, mode)) {
            if (shard.total == 1 ||
                shard_key(canonical_code(c, mode)) % uint64_t(shard.total) ==
                    uint64_t(shard.index))
                fn(c);
        }
        // odometer over the color array
        std::size_t i = 0;
        while (i < m && c.colors()[i] == t) c.colors()[i++] = 1;
        if (i == m) break;
        ++c.colors()[i];
    }
}

}  // namespace rc
