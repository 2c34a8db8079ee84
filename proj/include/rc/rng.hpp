#pragma once

#include <cstdint>
#include <random>

#include "rc/coloring.hpp"
#include "rc/graph.hpp"

namespace rc {

/// Uniform draw from [0, bound) by rejection; mt19937_64 output is
/// specified by the standard, so results are identical across platforms
/// (uniform_int_distribution is not).
uint64_t bounded_random(std::mt19937_64& rng, uint64_t bound);

/// Each edge color independent uniform in 1..t.
EdgeColoring random_coloring(int n, int t, std::mt19937_64& rng);

/// Perturbation of a random partition-vector coloring: a random vector
/// [p_1..p_t] summing to n, with `flips` random edges recolored.
/// Stress generator for guarantee-style claims, which are tight near
/// extremal colorings rather than near uniform ones.
EdgeColoring near_extremal_coloring(int n, int t, int flips, std::mt19937_64& rng);

/// Each of the C(n,2) edges present independently with probability
/// num/den.
Graph random_graph(int n, int num, int den, std::mt19937_64& rng);

}  // namespace rc
