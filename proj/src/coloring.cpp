#include "rc/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rc {

int PartitionVector::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

EdgeColoring::EdgeColoring(int n, int t) : n_(n), t_(t) {
    if (n < 1 || t < 1) throw std::invalid_argument("coloring: need n >= 1, t >= 1");
    if (t > 255) throw std::invalid_argument("coloring: t > 255 unsupported");
    colors_.assign(std::size_t(n) * (n - 1) / 2, 1);
}

std::size_t EdgeColoring::pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    // row-major upper triangle: row u starts after (u-1)n - u(u-1)/2 pairs
    return std::size_t(u - 1) * n - std::size_t(u) * (u - 1) / 2 + (v - u - 1);
}

int EdgeColoring::color(int u, int v) const {
    if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
        throw std::invalid_argument("coloring: bad vertex pair");
    return colors_[pair_index(n_, u, v)];
}

void EdgeColoring::set_color(int u, int v, int c) {
    if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
        throw std::invalid_argument("coloring: bad vertex pair");
    if (c < 1 || c > t_) throw std::invalid_argument("coloring: color out of 1..t");
    colors_[pair_index(n_, u, v)] = static_cast<uint8_t>(c);
}

EdgeColoring partition_coloring(const PartitionVector& pv) {
    int n = pv.total();
    int t = pv.t();
    if (t < 1) throw std::invalid_argument("partition_coloring: empty vector");
    if (n < 1) throw std::invalid_argument("partition_coloring: all parts zero");
    for (int p : pv.parts)
        if (p < 0) throw std::invalid_argument("partition_coloring: negative part");
    // block[v] = index of the part containing v
    std::vector<int> block(n + 1, 0);
    int v = 1;
    for (int j = 0; j < t; ++j)
        for (int i = 0; i < pv.parts[j]; ++i) block[v++] = j + 1;
    EdgeColoring c(n, t);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            c.set_color(a, b, std::min(block[a], block[b]));
    return c;
}

PartitionVector extremal_main_parts(int t, int k) {
    if (t < 2) throw std::invalid_argument("extremal_main: t < 2");
    if (k < 1) throw std::invalid_argument("extremal_main: k < 1");
    long long denom = (1LL << (t - 1)) - 1;
    int p = static_cast<int>((k - 1) / denom);
    int n = 2 * k - 1 + p;
    PartitionVector pv;
    long long used = 0;
    for (int j = 0; j < t - 1; ++j) {
        long long part = (1LL << j) * p;
        pv.parts.push_back(static_cast<int>(part));
        used += part;
    }
    pv.parts.push_back(static_cast<int>(n - used));  // q = N - (2^{t-1}-1)p
    return pv;
}

EdgeColoring extremal_main_coloring(int t, int k) {
    return partition_coloring(extremal_main_parts(t, k));
}

EdgeColoring cockayne_lorimer_coloring(int t, int p) {
    if (t < 1) throw std::invalid_argument("cockayne_lorimer_coloring: t < 1");
    if (p < 1) throw std::invalid_argument("cockayne_lorimer_coloring: p < 1");
    PartitionVector pv;
    pv.parts.assign(t - 1, p);
    pv.parts.push_back(2 * p + 1);
    return partition_coloring(pv);
}

bool nb_rules_hold(int t, const std::vector<int>& crossing) {
    if (static_cast<int>(crossing.size()) != t * (t - 1) / 2) return false;
    for (int a = 1; a <= t; ++a)
        for (int b = a + 1; b <= t; ++b) {
            int c = crossing[EdgeColoring::pair_index(t, a, b)];
            if (c < 1 || c > t) return false;
            if (c == a || c == b) return false;  // color i avoids part i
        }
    // each color class must span a bipartite part graph (2-colorability)
    for (int c = 1; c <= t; ++c) {
        std::vector<int> side(t + 1, 0);
        for (int s = 1; s <= t; ++s) {
            if (side[s]) continue;
            side[s] = 1;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int a = stack.back();
                stack.pop_back();
                for (int b = 1; b <= t; ++b) {
                    if (b == a) continue;
                    if (crossing[EdgeColoring::pair_index(t, std::min(a, b),
                                                          std::max(a, b))] != c)
                        continue;
                    if (side[b] == 0) {
                        side[b] = 3 - side[a];
                        stack.push_back(b);
                    } else if (side[b] == side[a]) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

namespace {

// Backtracking over pair->color assignments for even t. Rule 1 prunes the
// domain; rule 2 is maintained incrementally with per-color parity DSU.
struct NbSearch {
    int t;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> assign;
    // dsu[c] over parts with parity to the root; merging two parts already
    // in the same class with even parity would close an odd cycle
    std::vector<std::vector<int>> par, rank_, parity;

    explicit NbSearch(int tt) : t(tt) {
        for (int a = 1; a <= t; ++a)
            for (int b = a + 1; b <= t; ++b) pairs.emplace_back(a, b);
        assign.assign(pairs.size(), 0);
        par.assign(t + 1, {});
        rank_.assign(t + 1, {});
        parity.assign(t + 1, {});
        for (int c = 1; c <= t; ++c) {
            par[c].resize(t + 1);
            std::iota(par[c].begin(), par[c].end(), 0);
            rank_[c].assign(t + 1, 0);
            parity[c].assign(t + 1, 0);
        }
    }

    std::pair<int, int> find(int c, int x) {
        int p = 0;
        while (par[c][x] != x) {
            p ^= parity[c][x];
            x = par[c][x];
        }
        return {x, p};
    }

    bool run(std::size_t i) {
        if (i == pairs.size()) return true;
        auto [a, b] = pairs[i];
        for (int c = 1; c <= t; ++c) {
            if (c == a || c == b) continue;
            auto [ra, pa] = find(c, a);
            auto [rb, pb] = find(c, b);
            if (ra == rb) {
                if (pa == pb) continue;  // odd cycle in class c
                assign[i] = c;
                if (run(i + 1)) return true;
                assign[i] = 0;
                continue;
            }
            // union by rank, remember enough to undo
            if (rank_[c][ra] < rank_[c][rb]) {
                std::swap(ra, rb);
                std::swap(pa, pb);
            }
            par[c][rb] = ra;
            parity[c][rb] = pa ^ pb ^ 1;
            int bumped = 0;
            if (rank_[c][ra] == rank_[c][rb]) {
                ++rank_[c][ra];
                bumped = 1;
            }
            assign[i] = c;
            if (run(i + 1)) return true;
            assign[i] = 0;
            par[c][rb] = rb;
            parity[c][rb] = 0;
            rank_[c][ra] -= bumped;
        }
        return false;
    }
};

}  // namespace

NbAssignment nb_crossing_assignment(int t) {
    if (t < 3)
        throw std::invalid_argument("nb_crossing_assignment: impossible for t < 3");
    NbAssignment out;
    if (t % 2 == 1) {
        // pair {a,b} -> the unique c with a+b = 2c (mod t); class c is a
        // perfect matching on the parts avoiding part c
        out.crossing.assign(t * (t - 1) / 2, 0);
        int inv2 = (t + 1) / 2;  // inverse of 2 mod odd t
        for (int a = 1; a <= t; ++a)
            for (int b = a + 1; b <= t; ++b) {
                int c = static_cast<int>((std::int64_t(a + b) * inv2) % t);
                if (c == 0) c = t;
                out.crossing[EdgeColoring::pair_index(t, a, b)] = c;
            }
    } else {
        NbSearch search(t);
        if (!search.run(0))
            throw std::runtime_error("nb_crossing_assignment: search failed for t=" +
                                     std::to_string(t));
        out.crossing = search.assign;
        out.searched = true;
    }
    if (!nb_rules_hold(t, out.crossing))
        throw std::runtime_error("nb_crossing_assignment: rule check failed for t=" +
                                 std::to_string(t));
    return out;
}

EdgeColoring nb_coloring(int t, int part_size) {
    if (t < 3) throw std::invalid_argument("nb_coloring: t < 3");
    if (part_size < 1) throw std::invalid_argument("nb_coloring: part_size < 1");
    NbAssignment nb = nb_crossing_assignment(t);
    int n = t * part_size;
    EdgeColoring c(n, t);
    auto part_of = [part_size](int v) { return (v - 1) / part_size + 1; };
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            int pu = part_of(u), pv = part_of(v);
            if (pu == pv)
                c.set_color(u, v, pu);
            else
                c.set_color(u, v, nb.crossing[EdgeColoring::pair_index(t, pu, pv)]);
        }
    return c;
}

std::vector<std::string> validate(const EdgeColoring& c) {
    std::vector<std::string> out;
    if (c.n() < 1) out.push_back("n < 1");
    if (c.t() < 1) out.push_back("t < 1");
    std::size_t want = c.n() >= 1 ? std::size_t(c.n()) * (c.n() - 1) / 2 : 0;
    if (c.colors().size() != want) {
        out.push_back("colors array has " + std::to_string(c.colors().size()) +
                      " entries, expected C(n,2) = " + std::to_string(want));
        return out;
    }
    for (int u = 1; u <= c.n(); ++u)
        for (int v = u + 1; v <= c.n(); ++v) {
            int col = c.colors()[EdgeColoring::pair_index(c.n(), u, v)];
            if (col < 1 || col > c.t())
                out.push_back("pair (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has color " + std::to_string(col) + " outside 1.." +
                              std::to_string(c.t()));
        }
    return out;
}

EdgeColoring coloring_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("coloring json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("t") || !j.contains("colors"))
        throw std::runtime_error("coloring json: expected object with \"n\", \"t\", \"colors\"");
    if (!j["n"].is_number_integer() || !j["t"].is_number_integer() ||
        !j["colors"].is_array())
        throw std::runtime_error("coloring json: bad field types");
    int n = j["n"].get<int>(), t = j["t"].get<int>();
    if (n < 1 || t < 1) throw std::runtime_error("coloring json: need n >= 1, t >= 1");
    std::size_t want = std::size_t(n) * (n - 1) / 2;
    if (j["colors"].size() != want)
        throw std::runtime_error("coloring json: colors array has " +
                                 std::to_string(j["colors"].size()) +
                                 " entries, expected C(n,2) = " + std::to_string(want));
    EdgeColoring c(n, t);
    std::size_t i = 0;
    for (const auto& e : j["colors"]) {
        if (!e.is_number_integer())
            throw std::runtime_error("coloring json: non-integer color entry");
        int col = e.get<int>();
        if (col < 1 || col > t)
            throw std::runtime_error("coloring json: color " + std::to_string(col) +
                                     " outside 1.." + std::to_string(t) +
                                     " (colors are 1-based)");
        c.colors()[i++] = static_cast<uint8_t>(col);
    }
    return c;
}

std::string coloring_to_json_text(const EdgeColoring& c) {
    nlohmann::json j;
    j["n"] = c.n();
    j["t"] = c.t();
    j["colors"] = nlohmann::json::array();
    for (uint8_t col : c.colors()) j["colors"].push_back(int(col));
    return j.dump();
}

EdgeColoring read_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return coloring_from_json_text(ss.str());
}

void write_coloring(const EdgeColoring& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << coloring_to_json_text(c) << "\n";
}

}  // namespace rc
