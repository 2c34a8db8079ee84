#include "rc/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "rc/covers.hpp"
#include "rc/matching.hpp"
#include "rc/ramsey.hpp"
#include "rc/rng.hpp"

namespace rc {

Claim Claim::parse(const std::string& name, int param) {
    Claim c;
    c.param = param;
    if (name == "main")
        c.name = ClaimName::Main;
    else if (name == "missone")
        c.name = ClaimName::MissOne;
    else if (name == "cockayne_lorimer" || name == "cockayne-lorimer")
        c.name = ClaimName::CockayneLorimer;
    else if (name == "conj42")
        c.name = ClaimName::Conj42;
    else if (name == "ryser")
        c.name = ClaimName::Ryser;
    else if (name == "conncover")
        c.name = ClaimName::ConnCover;
    else if (name == "conj2")
        c.name = ClaimName::Conj2;
    else if (name == "cyccov")
        c.name = ClaimName::CycCov;
    else
        throw std::invalid_argument("unknown claim: " + name);
    if (!c.param_key().empty() && param < (c.name == ClaimName::CockayneLorimer ? 0 : 1))
        throw std::invalid_argument("claim " + name + " needs a positive parameter");
    return c;
}

std::string Claim::name_string() const {
    switch (name) {
        case ClaimName::Main: return "main";
        case ClaimName::MissOne: return "missone";
        case ClaimName::CockayneLorimer: return "cockayne_lorimer";
        case ClaimName::Conj42: return "conj42";
        case ClaimName::Ryser: return "ryser";
        case ClaimName::ConnCover: return "conncover";
        case ClaimName::Conj2: return "conj2";
        case ClaimName::CycCov: return "cyccov";
    }
    return "?";
}

std::string Claim::param_key() const {
    switch (name) {
        case ClaimName::Main:
        case ClaimName::Conj42: return "k";
        case ClaimName::CockayneLorimer: return "p";
        case ClaimName::ConnCover: return "s";
        default: return "";
    }
}

bool claim_is_theorem_backed(const Claim& claim, int t) {
    switch (claim.name) {
        case ClaimName::Main:
        case ClaimName::MissOne:
        case ClaimName::CockayneLorimer: return true;
        case ClaimName::Ryser:
        case ClaimName::ConnCover: return t <= 5;
        default: return false;
    }
}

bool claim_applicable(int n, int t, const Claim& claim, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    switch (claim.name) {
        case ClaimName::Main: {
            if (t < 2) return fail("main: t < 2");
            int thr = main_threshold(claim.param, t).n_guarantee;
            if (n < thr)
                return fail("main: n = " + std::to_string(n) + " below threshold " +
                            std::to_string(thr));
            return true;
        }
        case ClaimName::MissOne: {
            if (n % 2 != 0) return fail("missone: n is odd");
            if (n > (1 << t) - 2)
                return fail("missone: n = " + std::to_string(n) + " above 2^t-2 = " +
                            std::to_string((1 << t) - 2));
            return true;
        }
        case ClaimName::CockayneLorimer: {
            int thr = cockayne_lorimer_threshold(claim.param, t);
            if (n < thr)
                return fail("cockayne_lorimer: n = " + std::to_string(n) +
                            " below threshold " + std::to_string(thr));
            return true;
        }
        case ClaimName::Conj42: {
            if (t != 4) return fail("conj42: t != 4");
            int thr = (8 * claim.param - 2) / 3;
            if (n < thr)
                return fail("conj42: n = " + std::to_string(n) + " below threshold " +
                            std::to_string(thr));
            return true;
        }
        case ClaimName::Ryser:
            if (t < 2) return fail("ryser: t < 2");
            return true;
        case ClaimName::ConnCover:
            if (claim.param < 1 || claim.param > t - 1)
                return fail("conncover: s out of 1..t-1");
            return true;
        case ClaimName::Conj2:
            if (t != 3) return fail("conj2: t != 3");
            if (n > kPathOracleLimit) return fail("conj2: n exceeds the path oracle limit");
            return true;
        case ClaimName::CycCov:
            if (n > kCycleOracleLimit)
                return fail("cyccov: n exceeds the cycle oracle limit");
            return true;
    }
    return false;
}

namespace {

int color_complement_nu(const EdgeColoring& c, int avoided) {
    std::vector<int> others;
    for (int j = 1; j <= c.t(); ++j)
        if (j != avoided) others.push_back(j);
    return max_matching_size(color_restricted_subgraph(c, others));
}

// largest nu over s-subsets, sizes only
int max_s_colored_nu(const EdgeColoring& c, int s) {
    std::vector<int> subset(s);
    for (int i = 0; i < s; ++i) subset[i] = i + 1;
    int best = 0;
    for (;;) {
        best = std::max(best, max_matching_size(color_restricted_subgraph(c, subset)));
        int i = s - 1;
        while (i >= 0 && subset[i] == c.t() - (s - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
    }
    return best;
}

}  // namespace

CheckOutcome check_claim(const EdgeColoring& c, const Claim& claim, std::string* diag) {
    std::string why;
    if (!claim_applicable(c.n(), c.t(), claim, &why)) {
        if (diag) *diag = why;
        return CheckOutcome::Inapplicable;
    }
    auto violated = [&](const std::string& msg) {
        if (diag) *diag = msg;
        return CheckOutcome::Violated;
    };
    switch (claim.name) {
        case ClaimName::Main: {
            for (int i = 1; i <= c.t(); ++i)
                if (color_complement_nu(c, i) >= claim.param) return CheckOutcome::Holds;
            return violated("no color i has nu(G_i) >= " + std::to_string(claim.param));
        }
        case ClaimName::MissOne: {
            for (int i = 1; i <= c.t(); ++i)
                if (color_complement_nu(c, i) == c.n() / 2) return CheckOutcome::Holds;
            return violated("no perfect matching misses a color");
        }
        case ClaimName::CockayneLorimer: {
            for (int i = 1; i <= c.t(); ++i)
                if (max_matching_size(color_restricted_subgraph(c, {i})) >=
                    claim.param + 1)
                    return CheckOutcome::Holds;
            return violated("largest monochromatic matching below " +
                            std::to_string(claim.param + 1));
        }
        case ClaimName::Conj42: {
            int got = max_s_colored_nu(c, 2);
            if (got >= claim.param) return CheckOutcome::Holds;
            return violated("largest 2-colored matching is " + std::to_string(got) +
                            " < " + std::to_string(claim.param));
        }
        case ClaimName::Ryser: {
            if (ryser_cover_check(c)) return CheckOutcome::Holds;
            return violated("no cover by " + std::to_string(c.t() - 1) +
                            " monochromatic components");
        }
        case ClaimName::ConnCover: {
            int covered = component_cover(c, claim.param).covered;
            if (covered * (c.t() - 1) >= c.n() * claim.param) return CheckOutcome::Holds;
            return violated("covered " + std::to_string(covered) + " < ns/(t-1)");
        }
        case ClaimName::Conj2: {
            int covered = brute_path_cover(c, 2).covered;
            if (7 * covered >= 6 * c.n()) return CheckOutcome::Holds;
            return violated("two paths cover " + std::to_string(covered) + " < 6n/7");
        }
        case ClaimName::CycCov: {
            if (brute_cycle_partition(c, c.t())) return CheckOutcome::Holds;
            return violated("no partition into " + std::to_string(c.t()) +
                            " monochromatic cycles");
        }
    }
    return CheckOutcome::Inapplicable;
}

namespace {

// All perfect matchings of K_n as lists of pair indices; n even, small.
std::vector<std::vector<std::size_t>> perfect_matching_index_lists(int n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::vector<char> used(n + 1, 0);
    auto rec = [&](auto&& self) -> void {
        int u = 1;
        while (u <= n && used[u]) ++u;
        if (u > n) {
            out.push_back(cur);
            return;
        }
        used[u] = 1;
        for (int v = u + 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            cur.push_back(EdgeColoring::pair_index(n, u, v));
            self(self);
            cur.pop_back();
            used[v] = 0;
        }
        used[u] = 0;
    };
    rec(rec);
    return out;
}

// per-coloring fast path used by the raw missone sweep
bool missone_holds_fast(const EdgeColoring& c,
                        const std::vector<std::vector<std::size_t>>& pms) {
    for (const auto& pm : pms) {
        uint32_t used = 0;
        for (std::size_t idx : pm) used |= uint32_t(1) << c.colors()[idx];
        if (std::popcount(used) < c.t()) return true;
    }
    return false;
}

}  // namespace

ClaimReport exhaustive_verify(int n, int t, const Claim& claim, EnumMode mode,
                              Shard shard, uint64_t node_budget) {
    std::string why;
    if (!claim_applicable(n, t, claim, &why))
        throw std::invalid_argument("exhaustive_verify: " + why);
    if (shard.total < 1 || shard.index < 0 || shard.index >= shard.total)
        throw std::invalid_argument("exhaustive_verify: bad shard");
    ClaimReport report;
    report.claim = claim;
    report.n = n;
    report.t = t;
    if (shard.total > 1) report.shard = shard;
    std::vector<std::vector<std::size_t>> pms;
    bool fast_missone = claim.name == ClaimName::MissOne && n <= 12;
    if (fast_missone) pms = perfect_matching_index_lists(n);
    auto visit = [&](const EdgeColoring& c) {
        if (report.status == ClaimStatus::Counterexample) return;
        ++report.checked;
        bool ok;
        std::string diag;
        if (fast_missone) {
            ok = missone_holds_fast(c, pms);
            if (!ok) diag = "no perfect matching misses a color";
        } else {
            ok = check_claim(c, claim, &diag) == CheckOutcome::Holds;
        }
        if (!ok) {
            report.status = ClaimStatus::Counterexample;
            report.counterexample = c;
            report.diagnostic = diag;
        }
    };
    if (mode == EnumMode::Raw) {
        if (raw_coloring_count(n, t) > node_budget)
            throw std::runtime_error("exhaustive_verify: t^C(n,2) exceeds the node budget");
        EdgeColoring c(n, t);
        std::size_t m = c.pair_count();
        uint64_t counter = 0;
        for (;;) {
            if (counter % uint64_t(shard.total) == uint64_t(shard.index)) visit(c);
            if (report.status == ClaimStatus::Counterexample) break;
            ++counter;
            std::size_t i = 0;
            while (i < m && c.colors()[i] == t) c.colors()[i++] = 1;
            if (i == m) break;
            ++c.colors()[i];
        }
    } else {
        SymmetryMode sym = mode == EnumMode::VertexOnly ? SymmetryMode::VertexOnly
                                                        : SymmetryMode::VertexAndColor;
        enumerate_colorings(n, t, sym, shard, node_budget, visit);
    }
    return report;
}

ClaimReport random_verify(int n, int t, const Claim& claim, uint64_t samples,
                          uint64_t seed, SampleGenerator gen) {
    std::string why;
    if (!claim_applicable(n, t, claim, &why))
        throw std::invalid_argument("random_verify: " + why);
    ClaimReport report;
    report.claim = claim;
    report.n = n;
    report.t = t;
    report.seed = seed;
    report.status = ClaimStatus::SampledOk;
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < samples; ++i) {
        EdgeColoring c = gen == SampleGenerator::Uniform
                             ? random_coloring(n, t, rng)
                             : near_extremal_coloring(n, t, 3, rng);
        ++report.checked;
        std::string diag;
        if (check_claim(c, claim, &diag) != CheckOutcome::Holds) {
            report.status = ClaimStatus::Counterexample;
            report.counterexample = c;
            report.diagnostic = diag;
            break;
        }
    }
    return report;
}

ClaimReport merge_reports(const std::vector<ClaimReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("merge_reports: empty");
    ClaimReport out = reports.front();
    out.shard.reset();
    out.checked = 0;
    for (const auto& r : reports) {
        out.checked += r.checked;
        if (r.status == ClaimStatus::Counterexample &&
            out.status != ClaimStatus::Counterexample) {
            out.status = ClaimStatus::Counterexample;
            out.counterexample = r.counterexample;
            out.diagnostic = r.diagnostic;
        }
    }
    return out;
}

std::string report_to_json_text(const ClaimReport& report) {
    nlohmann::json j;
    j["claim"] = report.claim.name_string();
    j["params"] = nlohmann::json::object();
    if (!report.claim.param_key().empty())
        j["params"][report.claim.param_key()] = report.claim.param;
    j["n"] = report.n;
    j["t"] = report.t;
    switch (report.status) {
        case ClaimStatus::Verified: j["status"] = "verified"; break;
        case ClaimStatus::Counterexample: j["status"] = "counterexample"; break;
        case ClaimStatus::SampledOk: j["status"] = "sampled-ok"; break;
    }
    j["checked"] = report.checked;
    if (report.seed) j["seed"] = *report.seed;
    if (report.shard) j["shard"] = {report.shard->index, report.shard->total};
    if (report.counterexample)
        j["counterexample"] = nlohmann::json::parse(
            coloring_to_json_text(*report.counterexample));
    if (!report.diagnostic.empty()) j["diagnostic"] = report.diagnostic;
    return j.dump();
}

}  // namespace rc
