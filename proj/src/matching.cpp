#include "rc/matching.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace rc {

namespace {

// Classic O(V^3) blossom search: repeated BFS for an augmenting path with
// blossom contraction tracked through base[].
class Blossom {
public:
    explicit Blossom(const Graph& g) : n_(g.n()), adj_(n_) {
        for (const auto& [u, v] : g.edges()) {
            adj_[u - 1].push_back(v - 1);
            adj_[v - 1].push_back(u - 1);
        }
        match_.assign(n_, -1);
        parent_.assign(n_, -1);
        base_.assign(n_, 0);
        used_.assign(n_, 0);
        in_blossom_.assign(n_, 0);
    }

    // Mate array, -1 for unmatched; deterministic for a fixed graph.
    std::vector<int> solve() {
        // greedy seeding cuts the number of augmenting searches
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1)
                for (int u : adj_[v])
                    if (match_[u] == -1) {
                        match_[v] = u;
                        match_[u] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) {
                int w = find_path(v);
                while (w != -1) {
                    int pv = parent_[w];
                    int ppv = match_[pv];
                    match_[w] = pv;
                    match_[pv] = w;
                    w = ppv;
                }
            }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

}  // namespace

int max_matching_size(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    auto mate = Blossom(g).solve();
    int matched = 0;
    for (int v = 0; v < g.n(); ++v)
        if (mate[v] != -1) ++matched;
    return matched / 2;
}

Matching max_matching(const Graph& g) {
    int target = max_matching_size(g);
    Matching out;
    Graph rest = g;
    int need = target;
    while (need > 0) {
        // edges() is lex sorted; the first edge extendable to a maximum
        // matching of the residue is the lex-min next choice
        for (const auto& [u, v] : rest.edges()) {
            Graph next = rest.remove_vertices({u, v});
            if (max_matching_size(next) == need - 1) {
                out.edges.emplace_back(u, v);
                rest = std::move(next);
                break;
            }
        }
        --need;
    }
    return out;
}

namespace {

struct BruteCtx {
    std::vector<uint32_t> adj;  // 0-based masks
    std::vector<int8_t> memo;

    int best(uint32_t mask) {
        if (!mask) return 0;
        int8_t& m = memo[mask];
        if (m >= 0) return m;
        int v = std::countr_zero(mask);
        uint32_t rest = mask & (mask - 1);
        int r = best(rest);  // leave v unmatched
        uint32_t cand = adj[v] & rest;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            r = std::max(r, 1 + best(rest & ~(uint32_t(1) << u)));
        }
        m = static_cast<int8_t>(r);
        return r;
    }
};

}  // namespace

int brute_force_max_matching_size(const Graph& g, int limit) {
    if (g.n() > limit)
        throw std::invalid_argument("brute_force_max_matching: n exceeds oracle limit");
    BruteCtx ctx;
    ctx.adj.assign(g.n(), 0);
    for (const auto& [u, v] : g.edges()) {
        ctx.adj[u - 1] |= uint32_t(1) << (v - 1);
        ctx.adj[v - 1] |= uint32_t(1) << (u - 1);
    }
    ctx.memo.assign(std::size_t(1) << g.n(), -1);
    return ctx.best((uint32_t(1) << g.n()) - 1);
}

Matching brute_force_max_matching(const Graph& g, int limit) {
    if (g.n() > limit)
        throw std::invalid_argument("brute_force_max_matching: n exceeds oracle limit");
    BruteCtx ctx;
    ctx.adj.assign(g.n(), 0);
    for (const auto& [u, v] : g.edges()) {
        ctx.adj[u - 1] |= uint32_t(1) << (v - 1);
        ctx.adj[v - 1] |= uint32_t(1) << (u - 1);
    }
    ctx.memo.assign(std::size_t(1) << g.n(), -1);
    Matching out;
    uint32_t mask = (uint32_t(1) << g.n()) - 1;
    while (mask) {
        int total = ctx.best(mask);
        int v = std::countr_zero(mask);
        uint32_t rest = mask & (mask - 1);
        uint32_t cand = ctx.adj[v] & rest;
        bool took = false;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            uint32_t next = rest & ~(uint32_t(1) << u);
            if (1 + ctx.best(next) == total) {
                out.edges.emplace_back(v + 1, u + 1);
                mask = next;
                took = true;
                break;
            }
        }
        if (!took) mask = rest;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

int deficiency(const Graph& g) { return g.n() - 2 * max_matching_size(g); }

DeficiencyWitness berge_witness(const Graph& g) {
    int nu = max_matching_size(g);
    // D: vertices missed by some maximum matching; X = N(D) \ D
    // (Gallai-Edmonds), which attains the Tutte-Berge maximum.
    std::vector<char> in_d(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v)
        if (max_matching_size(g.remove_vertices({v})) == nu) in_d[v] = 1;
    DeficiencyWitness w;
    for (int v = 1; v <= g.n(); ++v) {
        if (in_d[v]) continue;
        bool touches_d = false;
        for (int u : g.neighbors(v))
            if (in_d[u]) {
                touches_d = true;
                break;
            }
        if (touches_d) w.x_set.push_back(v);
    }
    w.odd_components = odd_component_count(g, w.x_set);
    w.deficiency = w.odd_components - static_cast<int>(w.x_set.size());
    return w;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(g.n() + 1, 0);
    for (const auto& [u, v] : m.edges) {
        if (!g.has_edge(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

}  // namespace rc
