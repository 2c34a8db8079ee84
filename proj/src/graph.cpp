#include "rc/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rc {

Edge make_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    return {u, v};
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(n_ + 1, {});
    if (n_ <= 64) mask_.assign(n_ + 1, 0);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (u < 1 || v < 1 || u > n_ || v > n_)
        throw std::invalid_argument("graph: endpoint out of range");
    if (has_edge(u, v)) return;
    Edge e = make_edge(u, v);
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    if (has_masks()) {
        mask_[u] |= uint64_t(1) << (v - 1);
        mask_[v] |= uint64_t(1) << (u - 1);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
    if (has_masks()) return (mask_[u] >> (v - 1)) & 1;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const { return adj_.at(v); }

uint64_t Graph::neighbor_mask(int v) const { return mask_.at(v); }

Graph Graph::remove_vertices(const std::vector<int>& vs) const {
    std::vector<char> gone(n_ + 1, 0);
    for (int v : vs) {
        if (v < 1 || v > n_) throw std::invalid_argument("remove_vertices: out of range");
        gone[v] = 1;
    }
    Graph out(n_);
    for (const auto& [u, v] : edges_)
        if (!gone[u] && !gone[v]) out.add_edge(u, v);
    return out;
}

std::vector<std::vector<int>> components(const Graph& g,
                                         const std::vector<int>& removed) {
    std::vector<char> seen(g.n() + 1, 0);
    for (int v : removed) seen.at(v) = 1;
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 1; s <= g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

int odd_component_count(const Graph& g, const std::vector<int>& x) {
    if (g.has_masks()) {
        uint64_t removed = 0;
        for (int v : x) {
            if (v < 1 || v > g.n()) throw std::invalid_argument("odd_component_count: out of range");
            removed |= uint64_t(1) << (v - 1);
        }
        return odd_component_count_mask(g, removed);
    }
    int odd = 0;
    for (const auto& comp : components(g, x))
        if (comp.size() % 2 == 1) ++odd;
    return odd;
}

int odd_component_count_mask(const Graph& g, uint64_t removed) {
    uint64_t all = g.n() == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n()) - 1;
    uint64_t rem = all & ~removed;
    int odd = 0;
    while (rem) {
        uint64_t comp = rem & -rem;
        for (;;) {
            uint64_t frontier = comp;
            uint64_t grown = comp;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grown |= g.neighbor_mask(v + 1) & rem;
            }
            if (grown == comp) break;
            comp = grown;
        }
        if (std::popcount(comp) % 2 == 1) ++odd;
        rem &= ~comp;
    }
    return odd;
}

Graph graph_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::runtime_error("graph json: expected object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw std::runtime_error("graph json: \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 0) throw std::runtime_error("graph json: negative n");
    Graph g(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::runtime_error("graph json: edge must be a pair of integers");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u == v)
            throw std::runtime_error("graph json: loop edge [" + std::to_string(u) +
                                     "," + std::to_string(v) + "]");
        if (u < 1 || v < 1 || u > n || v > n)
            throw std::runtime_error("graph json: endpoint out of 1.." +
                                     std::to_string(n) + " in edge [" +
                                     std::to_string(u) + "," + std::to_string(v) + "]");
        if (g.has_edge(u, v))
            throw std::runtime_error("graph json: duplicate edge [" + std::to_string(u) +
                                     "," + std::to_string(v) + "]");
        g.add_edge(u, v);
    }
    return g;
}

std::string graph_to_json_text(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json_text(ss.str());
}

void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << graph_to_json_text(g) << "\n";
}

}  // namespace rc
