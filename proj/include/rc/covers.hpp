#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rc/coloring.hpp"
#include "rc/graph.hpp"

namespace rc {

struct PathPartition {
    struct Path {
        int color = 0;
        std::vector<int> vertices;  // in path order
    };
    std::vector<Path> paths;
    int probes = 0;  // edge-color probes spent building the partition
};

struct CoverPiece {
    std::string kind;  // "component" | "path" | "cycle" | "h-copy"
    int color = 0;
    std::vector<int> vertices;  // sorted
};

struct CoverCertificate {
    int covered = 0;
    std::vector<CoverPiece> pieces;
};

inline constexpr int kPathOracleLimit = 10;
inline constexpr int kCycleOracleLimit = 8;
inline constexpr int kTilingOracleLimit = 9;
inline constexpr int kComponentLimit = 128;

/// Partition of all n vertices into a color-1 path and a color-2 path
/// (either possibly empty), built by single-pass insertion with at most
/// three edge-color probes per vertex. Requires t = 2.
PathPartition two_color_path_partition(const EdgeColoring& c);

/// Empty vector means the partition is valid for c.
std::vector<std::string> validate_path_partition(const EdgeColoring& c,
                                                 const PathPartition& pp);

/// Exact maximum number of vertices covered by the vertex sets of at
/// most s monochromatic components (spanning-subgraph components, so
/// isolated vertices count). Requires n <= 64 and at most kComponentLimit
/// distinct component vertex sets.
/// With disjoint_pieces the chosen components must be pairwise disjoint
/// (the partition variant of the covering conjecture).
CoverCertificate component_cover(const EdgeColoring& c, int s,
                                 bool disjoint_pieces = false);

/// Cover of all n vertices by at most t-1 monochromatic components, or
/// nullopt when none exists (a counterexample to the covering claim).
std::optional<CoverCertificate> ryser_cover_check(const EdgeColoring& c);

/// Exact maximum vertices covered by s vertex-disjoint monochromatic
/// paths (single vertices count as paths). n <= kPathOracleLimit.
CoverCertificate brute_path_cover(const EdgeColoring& c, int s);

/// Two vertex-disjoint monochromatic cycles of different colors
/// partitioning V (empty set, one vertex and one edge count as cycles);
/// requires t = 2, n <= kCycleOracleLimit.
std::optional<CoverCertificate> brute_cycle_partition2(const EdgeColoring& c);

/// Partition of V into at most `pieces` monochromatic cycles, colors free
/// to repeat. n <= kCycleOracleLimit.
std::optional<CoverCertificate> brute_cycle_partition(const EdgeColoring& c, int pieces);

/// Greedy cover: repeatedly remove a monochromatic copy of h until none
/// remains, then keep the copies of the s best colors. When ramsey_bound
/// is a valid Ramsey bound for (h, t), covers at least s(n-ramsey_bound)/t
/// vertices.
CoverCertificate greedy_h_cover(const EdgeColoring& c, const Graph& h, int ramsey_bound,
                                int s);

/// Exact maximum vertices covered by vertex-disjoint monochromatic copies
/// of h whose colors form a set of size <= s. n <= kTilingOracleLimit.
CoverCertificate brute_h_tiling(const EdgeColoring& c, const Graph& h, int s);

/// First monochromatic copy of h (in color order, then lexicographic
/// vertex order) avoiding the banned vertices; image vertex list or empty.
std::vector<int> find_mono_copy(const EdgeColoring& c, const Graph& h,
                                const std::vector<char>& banned, int* color_out);

// CoverCertificate JSON:
// {"covered": int, "pieces": [{"kind": str, "color": int, "vertices": [int]}]}
std::string cover_to_json_text(const CoverCertificate& cert);
CoverCertificate cover_from_json_text(const std::string& text);
std::vector<std::string> revalidate_cover(const EdgeColoring& c,
                                          const CoverCertificate& cert);

}  // namespace rc
