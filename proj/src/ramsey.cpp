#include "rc/ramsey.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace rc {

namespace {

MatchingCertificate make_certificate(const EdgeColoring& c, Matching m) {
    MatchingCertificate cert;
    cert.size = m.size();
    std::vector<char> used(c.t() + 1, 0);
    for (const auto& [u, v] : m.edges) used[c.color(u, v)] = 1;
    for (int i = 1; i <= c.t(); ++i)
        (used[i] ? cert.colors_used : cert.missing_colors).push_back(i);
    cert.matching = std::move(m);
    return cert;
}

}  // namespace

ThresholdResult main_threshold(int k, int t) {
    if (t < 2) throw std::invalid_argument("main_threshold: t < 2");
    if (k < 1) throw std::invalid_argument("main_threshold: k < 1");
    ThresholdResult r;
    r.k = k;
    r.t = t;
    r.p = static_cast<int>((k - 1) / ((1LL << (t - 1)) - 1));
    r.n_guarantee = 2 * k + r.p;
    return r;
}

int cockayne_lorimer_threshold(int p, int t) {
    if (p < 0 || t < 1)
        throw std::invalid_argument("cockayne_lorimer_threshold: need p >= 0, t >= 1");
    return (t + 1) * p + 2;
}

Graph color_restricted_subgraph(const EdgeColoring& c, const std::vector<int>& s) {
    std::vector<char> keep(c.t() + 1, 0);
    for (int col : s) {
        if (col < 1 || col > c.t())
            throw std::invalid_argument("color_restricted_subgraph: color out of 1..t");
        keep[col] = 1;
    }
    Graph g(c.n());
    for (int u = 1; u <= c.n(); ++u)
        for (int v = u + 1; v <= c.n(); ++v)
            if (keep[c.color(u, v)]) g.add_edge(u, v);
    return g;
}

MatchingCertificate max_s_colored_matching(const EdgeColoring& c, int s) {
    if (s < 1 || s > c.t())
        throw std::invalid_argument("max_s_colored_matching: s out of 1..t");
    // sweep s-subsets of colors in lexicographic order; strict improvement
    // keeps the lex-least maximizing subset
    std::vector<int> subset(s);
    for (int i = 0; i < s; ++i) subset[i] = i + 1;
    int best_size = -1;
    std::vector<int> best_subset;
    for (;;) {
        int nu = max_matching_size(color_restricted_subgraph(c, subset));
        if (nu > best_size) {
            best_size = nu;
            best_subset = subset;
        }
        int i = s - 1;
        while (i >= 0 && subset[i] == c.t() - (s - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
    }
    return make_certificate(c, max_matching(color_restricted_subgraph(c, best_subset)));
}

std::optional<MatchingCertificate> find_missing_color_matching(const EdgeColoring& c,
                                                               int k) {
    if (k < 1) throw std::invalid_argument("find_missing_color_matching: k < 1");
    for (int i = 1; i <= c.t(); ++i) {
        std::vector<int> others;
        for (int j = 1; j <= c.t(); ++j)
            if (j != i) others.push_back(j);
        Graph gi = color_restricted_subgraph(c, others);
        if (max_matching_size(gi) >= k) {
            Matching m = max_matching(gi);
            m.edges.resize(k);
            return make_certificate(c, std::move(m));
        }
    }
    return std::nullopt;
}

std::optional<MatchingCertificate> perfect_matching_missing_color(const EdgeColoring& c) {
    if (c.n() % 2 != 0)
        throw std::invalid_argument("perfect_matching_missing_color: n is odd");
    return find_missing_color_matching(c, c.n() / 2);
}

ConnectedMatchingCertificate max_connected_mono_matching(const EdgeColoring& c) {
    ConnectedMatchingCertificate best;
    best.cert.size = -1;
    for (int i = 1; i <= c.t(); ++i) {
        Graph gi = color_restricted_subgraph(c, {i});
        for (const auto& comp : components(gi)) {
            // restrict gi to this component
            std::vector<char> in(c.n() + 1, 0);
            for (int v : comp) in[v] = 1;
            Graph sub(c.n());
            for (const auto& [u, v] : gi.edges())
                if (in[u] && in[v]) sub.add_edge(u, v);
            int nu = max_matching_size(sub);
            if (nu > best.cert.size) {
                best.cert = make_certificate(c, max_matching(sub));
                best.color = i;
                best.component = comp;
            }
        }
    }
    return best;
}

SharpnessReport sharpness_check_main(int t, int k) {
    SharpnessReport r;
    r.t = t;
    r.k = k;
    PartitionVector pv = extremal_main_parts(t, k);
    r.p = pv.parts[0];
    r.n = pv.total();
    EdgeColoring c = partition_coloring(pv);
    r.max_matching = max_s_colored_matching(c, t - 1).size;
    r.sharp = r.max_matching == k - 1;
    return r;
}

std::string certificate_to_json_text(const MatchingCertificate& cert) {
    nlohmann::json j;
    j["size"] = cert.size;
    j["colors_used"] = cert.colors_used;
    j["missing_colors"] = cert.missing_colors;
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : cert.matching.edges) j["edges"].push_back({u, v});
    return j.dump();
}

MatchingCertificate certificate_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("certificate json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("size") || !j.contains("edges") ||
        !j.contains("colors_used") || !j.contains("missing_colors"))
        throw std::runtime_error(
            "certificate json: expected size/colors_used/edges/missing_colors");
    MatchingCertificate cert;
    cert.size = j["size"].get<int>();
    cert.colors_used = j["colors_used"].get<std::vector<int>>();
    cert.missing_colors = j["missing_colors"].get<std::vector<int>>();
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("certificate json: edge must be a pair");
        cert.matching.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return cert;
}

std::vector<std::string> revalidate_certificate(const EdgeColoring& c,
                                                const MatchingCertificate& cert) {
    std::vector<std::string> out;
    if (cert.size != cert.matching.size())
        out.push_back("size field does not match edge count");
    std::vector<char> used(c.n() + 1, 0);
    std::vector<char> claimed(c.t() + 1, 0);
    for (int col : cert.colors_used) {
        if (col < 1 || col > c.t())
            out.push_back("colors_used contains " + std::to_string(col));
        else
            claimed[col] = 1;
    }
    for (int col : cert.missing_colors)
        if (col >= 1 && col <= c.t() && claimed[col])
            out.push_back("color " + std::to_string(col) + " both used and missing");
    for (const auto& [u, v] : cert.matching.edges) {
        if (u < 1 || v < 1 || u > c.n() || v > c.n() || u == v) {
            out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range");
            continue;
        }
        if (used[u] || used[v])
            out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") shares a vertex with another edge");
        used[u] = used[v] = 1;
        int col = c.color(u, v);
        if (!claimed[col])
            out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") has color " + std::to_string(col) +
                          " not in colors_used");
    }
    return out;
}

}  // namespace rc
