#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rc/graph.hpp"

namespace rc {

/// Block sizes [p_1,...,p_t] for a partition-vector coloring; zero parts
/// are allowed (a block of size 0 intersects nothing, so the min-j rule
/// still applies; the degenerate case shows up in the extremal
/// construction whenever k <= 2^{t-1}-1).
struct PartitionVector {
    std::vector<int> parts;

    int total() const;
    int t() const { return static_cast<int>(parts.size()); }
};

/// A t-coloring of the edges of K_n. Colors are 1..t, stored as a flat
/// upper-triangular array in row-major pair order:
/// (1,2),(1,3),...,(1,n),(2,3),... This order is normative for the JSON
/// certificate format.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int n, int t);  // all pairs start at color 1

    int n() const { return n_; }
    int t() const { return t_; }
    std::size_t pair_count() const { return colors_.size(); }

    static std::size_t pair_index(int n, int u, int v);

    int color(int u, int v) const;
    void set_color(int u, int v, int c);

    const std::vector<uint8_t>& colors() const { return colors_; }
    std::vector<uint8_t>& colors() { return colors_; }

    bool operator==(const EdgeColoring&) const = default;

private:
    int n_ = 0;
    int t_ = 0;
    std::vector<uint8_t> colors_;
};

/// Coloring [p_1,...,p_t]: vertices split into consecutive blocks
/// A_1..A_t, edge (x,y) gets the least j with {x,y} meeting A_j.
EdgeColoring partition_coloring(const PartitionVector& pv);

/// Parts [p, 2p, 4p, ..., 2^{t-2}p, q] on N = 2k-1+p vertices with
/// p = floor((k-1)/(2^{t-1}-1)) and q = N-(2^{t-1}-1)p; the maximum
/// (t-1)-colored matching of this coloring is k-1.
PartitionVector extremal_main_parts(int t, int k);
EdgeColoring extremal_main_coloring(int t, int k);

/// Coloring [p,...,p,2p+1] (t-1 copies of p) of K_{(t+1)p+1}; has no
/// monochromatic matching of size p+1.
EdgeColoring cockayne_lorimer_coloring(int t, int p);

/// Crossing color for each unordered pair of parts {a,b} (1-based),
/// indexed by EdgeColoring::pair_index(t, a, b). Satisfies both rules:
/// color i touches no crossing edge at part i, and each crossing color
/// class spans a bipartite part graph.
struct NbAssignment {
    std::vector<int> crossing;  // C(t,2) entries
    bool searched = false;      // true when found by search (even t)
};
NbAssignment nb_crossing_assignment(int t);
bool nb_rules_hold(int t, const std::vector<int>& crossing);

/// t equal parts of part_size vertices; edges inside part i get color i,
/// crossing edges are colored per nb_crossing_assignment. Requires t >= 3.
EdgeColoring nb_coloring(int t, int part_size);

/// Empty vector means ok; otherwise one message per violation.
std::vector<std::string> validate(const EdgeColoring& c);

// JSON format: {"n": int, "t": int, "colors": [c_12, c_13, ..., c_1n, c_23, ...]}
EdgeColoring coloring_from_json_text(const std::string& text);
std::string coloring_to_json_text(const EdgeColoring& c);
EdgeColoring read_coloring(const std::string& path);
void write_coloring(const EdgeColoring& c, const std::string& path);

}  // namespace rc
