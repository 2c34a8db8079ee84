#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rc/coloring.hpp"
#include "rc/graph.hpp"
#include "rc/matching.hpp"

namespace rc {

/// A matching in a colored K_n together with the color set it uses.
struct MatchingCertificate {
    Matching matching;
    std::vector<int> colors_used;     // sorted, colors appearing on the edges
    std::vector<int> missing_colors;  // sorted, 1..t minus colors_used
    int size = 0;
};

struct ThresholdResult {
    int n_guarantee = 0;
    int k = 0;
    int t = 0;
    int p = 0;
};

/// Least n at which every t-coloring of K_n has a (t-1)-colored matching
/// of size k: n = 2k + floor((k-1)/(2^{t-1}-1)).
ThresholdResult main_threshold(int k, int t);

/// Least n at which every t-coloring of K_n has a monochromatic matching
/// of size p+1: (t+1)p + 2.
int cockayne_lorimer_threshold(int p, int t);

/// Graph on 1..n whose edges are exactly the pairs colored within s.
Graph color_restricted_subgraph(const EdgeColoring& c, const std::vector<int>& s);

/// Largest matching using at most s colors; maximized over all s-subsets
/// of colors, blossom on each color-restricted subgraph. Reports the
/// lexicographically least maximizing subset.
MatchingCertificate max_s_colored_matching(const EdgeColoring& c, int s);

/// Size-k matching avoiding some color (the smallest color i with
/// nu(G_i) >= k, where G_i drops color i); nullopt when no color works.
/// Guaranteed to succeed when n >= main_threshold(k, t).
std::optional<MatchingCertificate> find_missing_color_matching(const EdgeColoring& c,
                                                               int k);

/// Perfect matching missing at least one color; requires n even. Always
/// exists when n = 2^t - 2.
std::optional<MatchingCertificate> perfect_matching_missing_color(const EdgeColoring& c);

/// Largest monochromatic matching confined to one component of its
/// color's spanning subgraph; component recorded in the certificate.
struct ConnectedMatchingCertificate {
    MatchingCertificate cert;
    int color = 0;
    std::vector<int> component;  // sorted vertex list
};
ConnectedMatchingCertificate max_connected_mono_matching(const EdgeColoring& c);

struct SharpnessReport {
    int t = 0;
    int k = 0;
    int p = 0;
    int n = 0;
    int max_matching = 0;  // maximum (t-1)-colored matching of the extremal coloring
    bool sharp = false;    // max_matching == k-1
};

/// Builds extremal_main_coloring(t, k) and measures its maximum
/// (t-1)-colored matching; sharp iff the result is exactly k-1.
SharpnessReport sharpness_check_main(int t, int k);

// Certificate JSON:
// {"size": int, "colors_used": [int], "edges": [[u,v],...], "missing_colors": [int]}
std::string certificate_to_json_text(const MatchingCertificate& cert);
MatchingCertificate certificate_from_json_text(const std::string& text);

/// Empty vector means the certificate is consistent with the coloring.
std::vector<std::string> revalidate_certificate(const EdgeColoring& c,
                                                const MatchingCertificate& cert);

}  // namespace rc
