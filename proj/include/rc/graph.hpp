#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rc {

/// Unordered edge, 1-based endpoints, first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Simple undirected graph on labelled vertices 1..n.
///
/// Adjacency is kept both as sorted neighbour lists and, for n <= 64, as
/// one bitmask word per vertex (bit v-1 set when v is a neighbour). The
/// mask rows are what the enumeration-heavy callers use.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;

    bool has_masks() const { return n_ <= 64; }
    uint64_t neighbor_mask(int v) const;  // requires has_masks()

    /// Same vertex set, all edges incident to the given vertices dropped.
    Graph remove_vertices(const std::vector<int>& vs) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;                // sorted, unique
    std::vector<std::vector<int>> adj_;      // 1-based index, sorted lists
    std::vector<uint64_t> mask_;             // 1-based index, valid when n_ <= 64
};

/// Connected components as sorted vertex lists, ignoring `removed` vertices.
std::vector<std::vector<int>> components(const Graph& g,
                                         const std::vector<int>& removed = {});

/// Number of odd-order components of g with the vertex set x removed.
int odd_component_count(const Graph& g, const std::vector<int>& x);

/// Mask-based fast path; requires g.has_masks(). `removed` is a bitmask
/// over vertices (bit v-1).
int odd_component_count_mask(const Graph& g, uint64_t removed);

// JSON format: {"n": int, "edges": [[u,v], ...]} with 1 <= u < v <= n.
// Throws std::runtime_error with a diagnostic on malformed input.
Graph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g);
Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path);

}  // namespace rc
