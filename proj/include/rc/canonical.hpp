#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rc/coloring.hpp"

namespace rc {

enum class SymmetryMode {
    VertexOnly,      // vertex permutations
    VertexAndColor,  // vertex permutations composed with color permutations
};

/// Byte string invariant under the mode's symmetry group: equal codes
/// iff the colorings are equivalent.
struct CanonicalCode {
    std::vector<uint8_t> code;
    SymmetryMode mode = SymmetryMode::VertexOnly;

    bool operator==(const CanonicalCode&) const = default;
};

inline constexpr int kCanonicalLimit = 12;

/// Colors of c read in colexicographic pair order
/// (1,2),(1,3),(2,3),(1,4),... — the raw code of the identity labeling.
std::vector<uint8_t> colex_code(const EdgeColoring& c);

/// Exact minimum code over the symmetry group, prefix-pruned search.
CanonicalCode canonical_code(const EdgeColoring& c, SymmetryMode mode);

/// True iff c is the chosen representative of its equivalence class
/// (its own colex code is already minimal).
bool is_canonical(const EdgeColoring& c, SymmetryMode mode);

struct Shard {
    int index = 0;
    int total = 1;
};

uint64_t shard_key(const CanonicalCode& code);

/// One representative per equivalence class of t-colorings of K_n under
/// the mode's group, restricted to the given shard. Shard membership is
/// a hash of the canonical code, so shards partition the class set and
/// need no coordination. Refuses jobs whose raw space t^C(n,2) exceeds
/// node_budget.
void enumerate_colorings(int n, int t, SymmetryMode mode, Shard shard,
                         uint64_t node_budget,
                         const std::function<void(const EdgeColoring&)>& fn);

/// t^C(n,2), clamped to UINT64_MAX on overflow.
uint64_t raw_coloring_count(int n, int t);

}  // namespace rc
