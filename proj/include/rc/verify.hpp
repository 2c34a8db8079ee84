#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rc/canonical.hpp"
#include "rc/coloring.hpp"

namespace rc {

inline constexpr uint64_t kDefaultNodeBudget = 1000000000ULL;

enum class ClaimName {
    Main,             // (t-1)-colored matching of size k at/above the threshold
    MissOne,          // perfect matching missing a color, even n <= 2^t-2
    CockayneLorimer,  // monochromatic matching of size p+1 at n >= (t+1)p+2
    Conj42,           // 2-colored matching of size k in 4-colorings
    Ryser,            // cover by <= t-1 monochromatic components
    ConnCover,        // >= ns/(t-1) vertices covered by <= s components
    Conj2,            // two disjoint monochromatic paths covering >= 6n/7, t=3
    CycCov,           // partition into t monochromatic cycles
};

struct Claim {
    ClaimName name = ClaimName::Main;
    int param = 0;  // k for main/conj42, p for cockayne_lorimer, s for conncover

    static Claim parse(const std::string& name, int param);
    std::string name_string() const;
    std::string param_key() const;  // "" when the claim takes no parameter
};

/// True when a counterexample would be an implementation bug rather than
/// a finding (proved theorems, and Ryser/ConnCover in the known t <= 5
/// regime).
bool claim_is_theorem_backed(const Claim& claim, int t);

enum class CheckOutcome { Holds, Violated, Inapplicable };

/// Checks the claim against one coloring. `diag` gets the quantity that
/// fell short on violation, or the unmet hypothesis when inapplicable.
CheckOutcome check_claim(const EdgeColoring& c, const Claim& claim,
                         std::string* diag = nullptr);

/// Whether the claim's hypothesis is met at dimensions (n, t); claims
/// here depend on the coloring only through its dimensions.
bool claim_applicable(int n, int t, const Claim& claim, std::string* why = nullptr);

enum class EnumMode { Raw, VertexOnly, VertexAndColor };
enum class SampleGenerator { Uniform, NearExtremal };

enum class ClaimStatus { Verified, Counterexample, SampledOk };

struct ClaimReport {
    Claim claim;
    int n = 0;
    int t = 0;
    ClaimStatus status = ClaimStatus::Verified;
    uint64_t checked = 0;
    std::optional<uint64_t> seed;
    std::optional<Shard> shard;
    std::optional<EdgeColoring> counterexample;
    std::string diagnostic;
};

/// Checks the claim on every t-coloring of K_n (raw sweep) or on every
/// equivalence-class representative (class modes). Stops at the first
/// violation. Refuses jobs whose raw space exceeds node_budget.
ClaimReport exhaustive_verify(int n, int t, const Claim& claim, EnumMode mode,
                              Shard shard = {}, uint64_t node_budget = kDefaultNodeBudget);

/// `samples` seeded colorings; deterministic for a fixed seed.
ClaimReport random_verify(int n, int t, const Claim& claim, uint64_t samples,
                          uint64_t seed,
                          SampleGenerator gen = SampleGenerator::Uniform);

/// Union of shard reports: counts add, any counterexample wins.
ClaimReport merge_reports(const std::vector<ClaimReport>& reports);

std::string report_to_json_text(const ClaimReport& report);

}  // namespace rc
