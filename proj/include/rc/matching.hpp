#pragma once

#include <vector>

#include "rc/graph.hpp"

namespace rc {

/// A set of pairwise vertex-disjoint edges.
struct Matching {
    std::vector<Edge> edges;  // sorted lexicographically

    int size() const { return static_cast<int>(edges.size()); }
};

/// Vertex set X attaining the Tutte-Berge maximum for its host graph.
struct DeficiencyWitness {
    std::vector<int> x_set;
    int odd_components = 0;
    int deficiency = 0;
};

/// Largest graphs the exhaustive matching oracle will accept.
inline constexpr int kBruteForceLimit = 14;

/// Maximum matching size nu(g), blossom search.
int max_matching_size(const Graph& g);

/// A maximum matching; among all maximum matchings, the lexicographically
/// smallest edge set under (min endpoint, max endpoint) order.
Matching max_matching(const Graph& g);

/// Independent oracle: exhaustive branching over edges via subset DP.
/// Requires n <= limit. Never calls the blossom path.
int brute_force_max_matching_size(const Graph& g, int limit = kBruteForceLimit);
Matching brute_force_max_matching(const Graph& g, int limit = kBruteForceLimit);

/// Number of vertices missed by every maximum matching, n - 2*nu(g).
int deficiency(const Graph& g);

/// Witness X with odd_component_count(g, X) - |X| = deficiency(g).
DeficiencyWitness berge_witness(const Graph& g);

/// True iff m is a matching and all its edges lie in g.
bool is_valid_matching(const Graph& g, const Matching& m);

}  // namespace rc
