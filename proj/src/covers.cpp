#include "rc/covers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace rc {

namespace {

std::vector<int> mask_to_vertices(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

// 0-based adjacency masks of the color-i spanning subgraph
std::vector<uint32_t> color_adjacency(const EdgeColoring& c, int color) {
    std::vector<uint32_t> adj(c.n(), 0);
    for (int u = 1; u <= c.n(); ++u)
        for (int v = u + 1; v <= c.n(); ++v)
            if (c.color(u, v) == color) {
                adj[u - 1] |= uint32_t(1) << (v - 1);
                adj[v - 1] |= uint32_t(1) << (u - 1);
            }
    return adj;
}

std::vector<uint64_t> mono_component_masks(const EdgeColoring& c, int color) {
    auto adj = color_adjacency(c, color);
    uint64_t rem = c.n() == 64 ? ~uint64_t(0) : (uint64_t(1) << c.n()) - 1;
    std::vector<uint64_t> out;
    while (rem) {
        uint64_t comp = rem & -rem;
        for (;;) {
            uint64_t grown = comp;
            uint64_t frontier = comp;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grown |= uint64_t(adj[v]) & rem;
            }
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        rem &= ~comp;
    }
    return out;
}

// last-vertex sets of Hamiltonian paths per vertex subset (any start)
std::vector<uint32_t> ham_path_table(const std::vector<uint32_t>& adj, int n) {
    std::vector<uint32_t> reach(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) reach[uint32_t(1) << v] = uint32_t(1) << v;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        uint32_t lasts = reach[mask];
        if (!lasts) continue;
        while (lasts) {
            int last = std::countr_zero(lasts);
            lasts &= lasts - 1;
            uint32_t nexts = adj[last] & ~mask;
            while (nexts) {
                int nx = std::countr_zero(nexts);
                nexts &= nexts - 1;
                reach[mask | (uint32_t(1) << nx)] |= uint32_t(1) << nx;
            }
        }
    }
    return reach;
}

// Hamiltonian cycle existence per subset; paths rooted at the subset's
// lowest vertex, closed by an edge back to the root. A two-vertex subset
// closes through its single edge, which matches the degenerate rule.
std::vector<char> ham_cycle_table(const std::vector<uint32_t>& adj, int n) {
    std::vector<uint32_t> reach(std::size_t(1) << n, 0);
    std::vector<char> cyc(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) {
        reach[uint32_t(1) << v] = uint32_t(1) << v;
        cyc[uint32_t(1) << v] = 1;
    }
    cyc[0] = 1;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        uint32_t lasts = reach[mask];
        if (!lasts) continue;
        int root = std::countr_zero(mask);
        uint32_t closers = lasts & adj[root] & ~(uint32_t(1) << root);
        if (closers && std::popcount(mask) >= 2) cyc[mask] = 1;
        while (lasts) {
            int last = std::countr_zero(lasts);
            lasts &= lasts - 1;
            uint32_t nexts = adj[last] & ~mask;
            nexts &= ~((uint32_t(1) << root) - 1);  // keep the root lowest
            while (nexts) {
                int nx = std::countr_zero(nexts);
                nexts &= nexts - 1;
                reach[mask | (uint32_t(1) << nx)] |= uint32_t(1) << nx;
            }
        }
    }
    return cyc;
}

// feasible[j][mask]: mask splits into <= j pieces with ok[piece]
std::vector<std::vector<char>> piece_partition_table(const std::vector<char>& ok, int n,
                                                     int max_pieces) {
    std::size_t size = std::size_t(1) << n;
    std::vector<std::vector<char>> feasible(max_pieces + 1,
                                            std::vector<char>(size, 0));
    for (int j = 0; j <= max_pieces; ++j) feasible[j][0] = 1;
    for (uint32_t mask = 1; mask < size; ++mask) feasible[1][mask] = ok[mask];
    for (int j = 2; j <= max_pieces; ++j)
        for (uint32_t mask = 1; mask < size; ++mask) {
            if (feasible[j - 1][mask]) {
                feasible[j][mask] = 1;
                continue;
            }
            uint32_t low = mask & -mask;
            // submasks containing the lowest bit, so each split is tried once
            for (uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
                if (!(sub & low)) continue;
                if (ok[sub] && feasible[j - 1][mask ^ sub]) {
                    feasible[j][mask] = 1;
                    break;
                }
            }
        }
    return feasible;
}

}  // namespace

PathPartition two_color_path_partition(const EdgeColoring& c) {
    if (c.t() != 2)
        throw std::invalid_argument("two_color_path_partition: requires t = 2");
    PathPartition out;
    std::vector<int> p1, p2;
    auto probe = [&](int u, int v) {
        ++out.probes;
        return c.color(u, v);
    };
    for (int v = 1; v <= c.n(); ++v) {
        if (p1.empty()) {
            p1.push_back(v);
            continue;
        }
        if (p2.empty()) {
            if (probe(p1.back(), v) == 1)
                p1.push_back(v);
            else
                p2.push_back(v);
            continue;
        }
        int x1 = p1.back(), x2 = p2.back();
        if (probe(x1, v) == 1) {
            p1.push_back(v);
            continue;
        }
        if (probe(x2, v) == 2) {
            p2.push_back(v);
            continue;
        }
        // c(x1,v) = 2 and c(x2,v) = 1: one of the bypasses works
        if (probe(x1, x2) == 1) {
            p2.pop_back();
            p1.push_back(x2);
            p1.push_back(v);
        } else {
            p1.pop_back();
            p2.push_back(x1);
            p2.push_back(v);
        }
    }
    if (!p1.empty()) out.paths.push_back({1, std::move(p1)});
    if (!p2.empty()) out.paths.push_back({2, std::move(p2)});
    return out;
}

std::vector<std::string> validate_path_partition(const EdgeColoring& c,
                                                 const PathPartition& pp) {
    std::vector<std::string> out;
    if (pp.paths.size() > 2) out.push_back("more than two paths");
    std::vector<char> seen(c.n() + 1, 0);
    std::vector<char> color_used(c.t() + 1, 0);
    int covered = 0;
    for (const auto& path : pp.paths) {
        if (path.color < 1 || path.color > c.t()) {
            out.push_back("path color out of range");
            continue;
        }
        if (color_used[path.color]) out.push_back("two paths share a color");
        color_used[path.color] = 1;
        for (std::size_t i = 0; i < path.vertices.size(); ++i) {
            int v = path.vertices[i];
            if (v < 1 || v > c.n()) {
                out.push_back("vertex out of range");
                continue;
            }
            if (seen[v]) out.push_back("vertex " + std::to_string(v) + " repeated");
            seen[v] = 1;
            ++covered;
            if (i > 0 && c.color(path.vertices[i - 1], v) != path.color)
                out.push_back("edge (" + std::to_string(path.vertices[i - 1]) + "," +
                              std::to_string(v) + ") is not color " +
                              std::to_string(path.color));
        }
    }
    if (covered != c.n()) out.push_back("partition does not cover all vertices");
    return out;
}

CoverCertificate component_cover(const EdgeColoring& c, int s, bool disjoint_pieces) {
    if (s < 1) throw std::invalid_argument("component_cover: s < 1");
    if (c.n() > 64) throw std::invalid_argument("component_cover: n > 64");
    struct Comp {
        uint64_t mask;
        int color;
    };
    std::vector<Comp> comps;
    for (int i = 1; i <= c.t(); ++i)
        for (uint64_t mask : mono_component_masks(c, i)) {
            bool dup = false;
            for (const auto& cm : comps)
                if (cm.mask == mask) {
                    dup = true;
                    break;
                }
            if (!dup) comps.push_back({mask, i});
        }
    if (static_cast<int>(comps.size()) > kComponentLimit)
        throw std::runtime_error("component_cover: component count exceeds limit");
    std::stable_sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
        return std::popcount(a.mask) > std::popcount(b.mask);
    });
    int picks = std::min<int>(s, static_cast<int>(comps.size()));
    uint64_t best_mask = 0;
    std::vector<int> best_choice, choice;
    int best = -1;
    auto dfs = [&](auto&& self, std::size_t idx, int left, uint64_t cur) -> void {
        int cur_count = std::popcount(cur);
        if (cur_count > best) {
            best = cur_count;
            best_mask = cur;
            best_choice = choice;
        }
        if (left == 0 || idx == comps.size() || cur_count == c.n()) return;
        if (cur_count + left * std::popcount(comps[idx].mask) <= best) return;
        for (std::size_t i = idx; i < comps.size(); ++i) {
            if ((comps[i].mask & ~cur) == 0) continue;
            if (disjoint_pieces && (comps[i].mask & cur) != 0) continue;
            choice.push_back(static_cast<int>(i));
            self(self, i + 1, left - 1, cur | comps[i].mask);
            choice.pop_back();
        }
    };
    dfs(dfs, 0, picks, 0);
    CoverCertificate out;
    out.covered = std::popcount(best_mask);
    for (int i : best_choice)
        out.pieces.push_back({"component", comps[i].color, mask_to_vertices(comps[i].mask)});
    return out;
}

std::optional<CoverCertificate> ryser_cover_check(const EdgeColoring& c) {
    if (c.t() < 2) throw std::invalid_argument("ryser_cover_check: t < 2");
    CoverCertificate cert = component_cover(c, c.t() - 1);
    if (cert.covered == c.n()) return cert;
    return std::nullopt;
}

CoverCertificate brute_path_cover(const EdgeColoring& c, int s) {
    if (s < 1) throw std::invalid_argument("brute_path_cover: s < 1");
    if (c.n() > kPathOracleLimit)
        throw std::invalid_argument("brute_path_cover: n exceeds oracle limit");
    int n = c.n();
    std::size_t size = std::size_t(1) << n;
    std::vector<std::vector<uint32_t>> reach;
    for (int i = 1; i <= c.t(); ++i)
        reach.push_back(ham_path_table(color_adjacency(c, i), n));
    std::vector<char> pathable(size, 0);
    for (uint32_t mask = 0; mask < size; ++mask) {
        if (std::popcount(mask) <= 1) {
            pathable[mask] = 1;
            continue;
        }
        for (int i = 0; i < c.t(); ++i)
            if (reach[i][mask]) {
                pathable[mask] = 1;
                break;
            }
    }
    int pieces = std::min(s, n);
    auto feasible = piece_partition_table(pathable, n, pieces);
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < size; ++mask)
        if (feasible[pieces][mask] &&
            std::popcount(mask) > std::popcount(best_mask))
            best_mask = mask;
    CoverCertificate out;
    out.covered = std::popcount(best_mask);
    // peel pieces off the chosen union
    uint32_t mask = best_mask;
    for (int j = pieces; j >= 1 && mask; --j) {
        uint32_t low = mask & -mask;
        for (uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !pathable[sub]) continue;
            if (j > 1 && !feasible[j - 1][mask ^ sub]) continue;
            if (j == 1 && (mask ^ sub) != 0) continue;
            int color = 1;
            if (std::popcount(sub) >= 2)
                for (int i = 0; i < c.t(); ++i)
                    if (reach[i][sub]) {
                        color = i + 1;
                        break;
                    }
            out.pieces.push_back({"path", color, mask_to_vertices(sub)});
            mask ^= sub;
            break;
        }
    }
    return out;
}

std::optional<CoverCertificate> brute_cycle_partition2(const EdgeColoring& c) {
    if (c.t() != 2)
        throw std::invalid_argument("brute_cycle_partition2: requires t = 2");
    if (c.n() > kCycleOracleLimit)
        throw std::invalid_argument("brute_cycle_partition2: n exceeds oracle limit");
    int n = c.n();
    auto cyc1 = ham_cycle_table(color_adjacency(c, 1), n);
    auto cyc2 = ham_cycle_table(color_adjacency(c, 2), n);
    uint32_t full = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    for (uint32_t mask = 0; mask <= full; ++mask)
        if (cyc1[mask] && cyc2[full ^ mask]) {
            CoverCertificate out;
            out.covered = n;
            if (mask) out.pieces.push_back({"cycle", 1, mask_to_vertices(mask)});
            if (full ^ mask)
                out.pieces.push_back({"cycle", 2, mask_to_vertices(full ^ mask)});
            return out;
        }
    return std::nullopt;
}

std::optional<CoverCertificate> brute_cycle_partition(const EdgeColoring& c, int pieces) {
    if (pieces < 1) throw std::invalid_argument("brute_cycle_partition: pieces < 1");
    if (c.n() > kCycleOracleLimit)
        throw std::invalid_argument("brute_cycle_partition: n exceeds oracle limit");
    int n = c.n();
    std::size_t size = std::size_t(1) << n;
    std::vector<std::vector<char>> cyc;
    for (int i = 1; i <= c.t(); ++i)
        cyc.push_back(ham_cycle_table(color_adjacency(c, i), n));
    std::vector<char> cyclable(size, 0);
    for (uint32_t mask = 0; mask < size; ++mask)
        for (int i = 0; i < c.t() && !cyclable[mask]; ++i)
            if (cyc[i][mask]) cyclable[mask] = 1;
    int limit = std::min(pieces, n == 0 ? 1 : n);
    auto feasible = piece_partition_table(cyclable, n, limit);
    uint32_t full = (uint32_t(1) << n) - 1;
    if (!feasible[limit][full]) return std::nullopt;
    CoverCertificate out;
    out.covered = n;
    uint32_t mask = full;
    for (int j = limit; j >= 1 && mask; --j) {
        uint32_t low = mask & -mask;
        for (uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !cyclable[sub]) continue;
            if (j > 1 && !feasible[j - 1][mask ^ sub]) continue;
            if (j == 1 && (mask ^ sub) != 0) continue;
            int color = 1;
            for (int i = 0; i < c.t(); ++i)
                if (cyc[i][sub]) {
                    color = i + 1;
                    break;
                }
            out.pieces.push_back({"cycle", color, mask_to_vertices(sub)});
            mask ^= sub;
            break;
        }
    }
    return out;
}

namespace {

// injective map of h into the color-col subgraph of c avoiding banned
// vertices; h vertices placed in BFS order so each new one attaches to a
// placed neighbour
bool map_h_copy(const EdgeColoring& c, const Graph& h, int col,
                const std::vector<char>& banned, const std::vector<int>& order,
                std::vector<int>& image, std::size_t pos, std::vector<char>& used,
                const std::vector<char>* inside) {
    if (pos == order.size()) return true;
    int hv = order[pos];
    for (int v = 1; v <= c.n(); ++v) {
        if (used[v] || banned[v]) continue;
        if (inside && !(*inside)[v]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pos && ok; ++i)
            if (h.has_edge(order[i], hv) && c.color(image[order[i]], v) != col)
                ok = false;
        if (!ok) continue;
        used[v] = 1;
        image[hv] = v;
        if (map_h_copy(c, h, col, banned, order, image, pos + 1, used, inside))
            return true;
        used[v] = 0;
    }
    return false;
}

std::vector<int> h_bfs_order(const Graph& h) {
    std::vector<int> order;
    std::vector<char> seen(h.n() + 1, 0);
    for (int s = 1; s <= h.n(); ++s) {
        if (seen[s]) continue;
        std::size_t head = order.size();
        seen[s] = 1;
        order.push_back(s);
        while (head < order.size()) {
            int v = order[head++];
            for (int u : h.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    order.push_back(u);
                }
        }
    }
    return order;
}

}  // namespace

std::vector<int> find_mono_copy(const EdgeColoring& c, const Graph& h,
                                const std::vector<char>& banned, int* color_out) {
    auto order = h_bfs_order(h);
    for (int col = 1; col <= c.t(); ++col) {
        std::vector<int> image(h.n() + 1, 0);
        std::vector<char> used(c.n() + 1, 0);
        if (map_h_copy(c, h, col, banned, order, image, 0, used, nullptr)) {
            if (color_out) *color_out = col;
            std::vector<int> out(image.begin() + 1, image.end());
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return {};
}

CoverCertificate greedy_h_cover(const EdgeColoring& c, const Graph& h, int ramsey_bound,
                                int s) {
    if (h.n() < 1 || h.n() > 5)
        throw std::invalid_argument("greedy_h_cover: h must have 1..5 vertices");
    if (components(h).size() != 1)
        throw std::invalid_argument("greedy_h_cover: h must be connected");
    if (s < 1 || s > c.t()) throw std::invalid_argument("greedy_h_cover: s out of 1..t");
    (void)ramsey_bound;  // bound for the guarantee, not used by the greedy loop
    std::vector<char> banned(c.n() + 1, 0);
    std::vector<std::vector<std::vector<int>>> by_color(c.t() + 1);
    for (;;) {
        int col = 0;
        auto copy = find_mono_copy(c, h, banned, &col);
        if (copy.empty()) break;
        for (int v : copy) banned[v] = 1;
        by_color[col].push_back(std::move(copy));
    }
    // pick the s colors covering the most, ties to the smaller color
    std::vector<int> colors(c.t());
    std::iota(colors.begin(), colors.end(), 1);
    std::stable_sort(colors.begin(), colors.end(), [&](int a, int b) {
        return by_color[a].size() > by_color[b].size();
    });
    CoverCertificate out;
    std::vector<int> picked(colors.begin(), colors.begin() + std::min<std::size_t>(s, colors.size()));
    std::sort(picked.begin(), picked.end());
    for (int col : picked)
        for (const auto& copy : by_color[col]) {
            out.covered += static_cast<int>(copy.size());
            out.pieces.push_back({"h-copy", col, copy});
        }
    return out;
}

CoverCertificate brute_h_tiling(const EdgeColoring& c, const Graph& h, int s) {
    if (c.n() > kTilingOracleLimit)
        throw std::invalid_argument("brute_h_tiling: n exceeds oracle limit");
    if (h.n() < 1 || h.n() > 5)
        throw std::invalid_argument("brute_h_tiling: h must have 1..5 vertices");
    if (components(h).size() != 1)
        throw std::invalid_argument("brute_h_tiling: h must be connected");
    if (s < 1 || s > c.t()) throw std::invalid_argument("brute_h_tiling: s out of 1..t");
    int n = c.n();
    int hn = h.n();
    auto order = h_bfs_order(h);
    // all (vertex set, color) hosting a monochromatic copy of h
    std::vector<std::vector<uint32_t>> copies(c.t() + 1);
    std::vector<char> banned(n + 1, 0);
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) != hn) continue;
        std::vector<char> inside(n + 1, 0);
        for (int v : mask_to_vertices(mask)) inside[v] = 1;
        for (int col = 1; col <= c.t(); ++col) {
            std::vector<int> image(hn + 1, 0);
            std::vector<char> used(n + 1, 0);
            if (map_h_copy(c, h, col, banned, order, image, 0, used, &inside))
                copies[col].push_back(mask);
        }
    }
    int best = -1;
    std::vector<int> best_subset;
    std::vector<int> subset(s);
    for (int i = 0; i < s; ++i) subset[i] = i + 1;
    std::vector<int16_t> memo(std::size_t(1) << n);
    auto tile = [&](auto&& self, uint32_t mask) -> int {
        int16_t& m = memo[mask];
        if (m >= 0) return m;
        int r = 0;
        for (int col : subset)
            for (uint32_t cp : copies[col])
                if ((cp & mask) == cp) r = std::max(r, hn + self(self, mask & ~cp));
        m = static_cast<int16_t>(r);
        return r;
    };
    for (;;) {
        std::fill(memo.begin(), memo.end(), int16_t(-1));
        int covered = tile(tile, (uint32_t(1) << n) - 1);
        if (covered > best) {
            best = covered;
            best_subset = subset;
        }
        int i = s - 1;
        while (i >= 0 && subset[i] == c.t() - (s - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
    }
    // rebuild the DP for the winning subset and peel the pieces
    subset = best_subset;
    std::fill(memo.begin(), memo.end(), int16_t(-1));
    tile(tile, (uint32_t(1) << n) - 1);
    CoverCertificate out;
    out.covered = best;
    uint32_t mask = (uint32_t(1) << n) - 1;
    while (tile(tile, mask) > 0) {
        bool took = false;
        for (int col : subset) {
            for (uint32_t cp : copies[col])
                if ((cp & mask) == cp && hn + tile(tile, mask & ~cp) == tile(tile, mask)) {
                    out.pieces.push_back({"h-copy", col, mask_to_vertices(cp)});
                    mask &= ~cp;
                    took = true;
                    break;
                }
            if (took) break;
        }
        if (!took) break;
    }
    return out;
}

std::string cover_to_json_text(const CoverCertificate& cert) {
    nlohmann::json j;
    j["covered"] = cert.covered;
    j["pieces"] = nlohmann::json::array();
    for (const auto& piece : cert.pieces) {
        nlohmann::json p;
        p["kind"] = piece.kind;
        p["color"] = piece.color;
        p["vertices"] = piece.vertices;
        j["pieces"].push_back(p);
    }
    return j.dump();
}

CoverCertificate cover_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("cover json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("covered") || !j.contains("pieces"))
        throw std::runtime_error("cover json: expected covered/pieces");
    CoverCertificate cert;
    cert.covered = j["covered"].get<int>();
    for (const auto& p : j["pieces"]) {
        CoverPiece piece;
        piece.kind = p.at("kind").get<std::string>();
        piece.color = p.at("color").get<int>();
        piece.vertices = p.at("vertices").get<std::vector<int>>();
        cert.pieces.push_back(std::move(piece));
    }
    return cert;
}

std::vector<std::string> revalidate_cover(const EdgeColoring& c,
                                          const CoverCertificate& cert) {
    std::vector<std::string> out;
    std::vector<char> covered(c.n() + 1, 0);
    std::vector<char> taken(c.n() + 1, 0);
    for (const auto& piece : cert.pieces) {
        if (piece.color < 1 || piece.color > c.t()) {
            out.push_back("piece color out of range");
            continue;
        }
        for (int v : piece.vertices) {
            if (v < 1 || v > c.n()) {
                out.push_back("piece vertex out of range");
                continue;
            }
            covered[v] = 1;
            if (piece.kind != "component") {
                if (taken[v])
                    out.push_back("vertex " + std::to_string(v) +
                                  " appears in two disjoint-kind pieces");
                taken[v] = 1;
            }
        }
        if (piece.kind == "component") {
            uint64_t mask = 0;
            for (int v : piece.vertices)
                if (v >= 1 && v <= 64) mask |= uint64_t(1) << (v - 1);
            auto comps = mono_component_masks(c, piece.color);
            if (std::find(comps.begin(), comps.end(), mask) == comps.end())
                out.push_back("component piece is not a color-" +
                              std::to_string(piece.color) + " component");
        } else if ((piece.kind == "path" || piece.kind == "cycle") &&
                   piece.vertices.size() >= 2 && piece.vertices.size() <= 12 &&
                   c.n() <= 20) {
            auto adj = color_adjacency(c, piece.color);
            // restrict to the piece and relabel densely
            int m = static_cast<int>(piece.vertices.size());
            std::vector<uint32_t> sub(m, 0);
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < m; ++k)
                    if (i != k &&
                        (adj[piece.vertices[i] - 1] >> (piece.vertices[k] - 1)) & 1)
                        sub[i] |= uint32_t(1) << k;
            uint32_t full = (uint32_t(1) << m) - 1;
            bool ok = piece.kind == "path" ? ham_path_table(sub, m)[full] != 0
                                           : ham_cycle_table(sub, m)[full] != 0;
            if (!ok)
                out.push_back("no monochromatic " + piece.kind + " of color " +
                              std::to_string(piece.color) + " spans the piece");
        } else if (piece.kind == "h-copy" && piece.vertices.size() >= 2) {
            // without h itself the checkable part is monochromatic connectivity
            auto adj = color_adjacency(c, piece.color);
            uint32_t inside = 0;
            for (int v : piece.vertices) inside |= uint32_t(1) << (v - 1);
            uint32_t comp = uint32_t(1) << (piece.vertices[0] - 1);
            for (;;) {
                uint32_t grown = comp;
                uint32_t frontier = comp;
                while (frontier) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    grown |= adj[v] & inside;
                }
                if (grown == comp) break;
                comp = grown;
            }
            if (comp != inside)
                out.push_back("h-copy piece is not connected in its color");
        }
    }
    int total = 0;
    for (int v = 1; v <= c.n(); ++v) total += covered[v];
    if (total != cert.covered)
        out.push_back("covered count is " + std::to_string(total) + ", certificate says " +
                      std::to_string(cert.covered));
    return out;
}

}  // namespace rc
