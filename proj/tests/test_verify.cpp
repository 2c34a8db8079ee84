#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rc/ramsey.hpp"
#include "rc/verify.hpp"

using namespace rc;

TEST_CASE("claim parsing") {
    CHECK(Claim::parse("main", 3).name == ClaimName::Main);
    CHECK(Claim::parse("main", 3).param == 3);
    CHECK(Claim::parse("missone", 0).name == ClaimName::MissOne);
    CHECK(Claim::parse("cockayne_lorimer", 2).name == ClaimName::CockayneLorimer);
    CHECK(Claim::parse("conj42", 2).name == ClaimName::Conj42);
    CHECK(Claim::parse("ryser", 0).name == ClaimName::Ryser);
    CHECK(Claim::parse("conncover", 2).name == ClaimName::ConnCover);
    CHECK(Claim::parse("conj2", 0).name == ClaimName::Conj2);
    CHECK(Claim::parse("cyccov", 0).name == ClaimName::CycCov);
    CHECK_THROWS(Claim::parse("bogus", 0));
    CHECK_THROWS(Claim::parse("main", 0));  // k >= 1
    CHECK(Claim::parse("main", 3).name_string() == "main");
    CHECK(Claim::parse("main", 3).param_key() == "k");
    CHECK(Claim::parse("conncover", 1).param_key() == "s");
    CHECK(Claim::parse("ryser", 0).param_key().empty());
}

TEST_CASE("theorem-backed flags") {
    CHECK(claim_is_theorem_backed(Claim::parse("main", 2), 4));
    CHECK(claim_is_theorem_backed(Claim::parse("missone", 0), 3));
    CHECK(claim_is_theorem_backed(Claim::parse("cockayne_lorimer", 1), 6));
    CHECK(claim_is_theorem_backed(Claim::parse("ryser", 0), 5));
    CHECK(!claim_is_theorem_backed(Claim::parse("ryser", 0), 6));
    CHECK(claim_is_theorem_backed(Claim::parse("conncover", 1), 4));
    CHECK(!claim_is_theorem_backed(Claim::parse("conj42", 2), 4));
    CHECK(!claim_is_theorem_backed(Claim::parse("conj2", 0), 3));
}

TEST_CASE("applicability gates") {
    std::string why;
    CHECK(claim_applicable(5, 2, Claim::parse("main", 2), &why));
    CHECK(!claim_applicable(4, 2, Claim::parse("main", 2), &why));  // below threshold
    CHECK(!why.empty());
    CHECK(claim_applicable(6, 3, Claim::parse("missone", 0)));
    CHECK(!claim_applicable(5, 3, Claim::parse("missone", 0)));  // odd
    CHECK(!claim_applicable(8, 3, Claim::parse("missone", 0)));  // above 2^t-2
    CHECK(!claim_applicable(4, 2, Claim::parse("cockayne_lorimer", 1)));
    CHECK(claim_applicable(5, 2, Claim::parse("cockayne_lorimer", 1)));
    CHECK(claim_applicable(4, 4, Claim::parse("conj42", 2)));
    CHECK(!claim_applicable(4, 3, Claim::parse("conj42", 2)));  // t must be 4
    CHECK(claim_applicable(7, 3, Claim::parse("conj2", 0)));
    CHECK(!claim_applicable(7, 2, Claim::parse("conj2", 0)));
}

TEST_CASE("check_claim on known colorings") {
    std::string diag;
    // hypothesis failure is inapplicable, not a violation
    CHECK(check_claim(partition_coloring({{1, 3}}), Claim::parse("cockayne_lorimer", 1),
                      &diag) == CheckOutcome::Inapplicable);

    // [1,3] on K_5 has no monochromatic matching of size 2? color 1 is a
    // star (nu=1), color 2 is K_4 (nu=2) -> claim holds at n=5
    CHECK(check_claim(partition_coloring({{1, 4}}), Claim::parse("cockayne_lorimer", 1)) ==
          CheckOutcome::Holds);

    CHECK(check_claim(EdgeColoring(6, 3), Claim::parse("missone", 0)) ==
          CheckOutcome::Holds);
    CHECK(check_claim(EdgeColoring(5, 2), Claim::parse("main", 2)) ==
          CheckOutcome::Holds);
    CHECK(check_claim(EdgeColoring(7, 3), Claim::parse("conj2", 0)) ==
          CheckOutcome::Holds);
    CHECK(check_claim(EdgeColoring(6, 2), Claim::parse("cyccov", 0)) ==
          CheckOutcome::Holds);
    CHECK(check_claim(EdgeColoring(6, 3), Claim::parse("ryser", 0)) ==
          CheckOutcome::Holds);
    CHECK(check_claim(EdgeColoring(6, 3), Claim::parse("conncover", 2)) ==
          CheckOutcome::Holds);

    // one vertex below the main threshold the extremal coloring violates
    auto ext = extremal_main_coloring(3, 4);  // K_8, max 2-colored matching 3
    CHECK(check_claim(ext, Claim::parse("main", 4), &diag) == CheckOutcome::Inapplicable);
}

TEST_CASE("padded extremal coloring satisfies the main claim at the threshold") {
    // extend extremal_main_coloring(3,4) by a ninth vertex; every way of
    // coloring its 8 new edges must yield a 2-colored matching of size 4
    auto base = extremal_main_coloring(3, 4);
    REQUIRE(base.n() == 8);
    EdgeColoring c(9, 3);
    for (int u = 1; u <= 8; ++u)
        for (int v = u + 1; v <= 8; ++v) c.set_color(u, v, base.color(u, v));
    Claim claim = Claim::parse("main", 4);
    std::vector<int> stalk(8, 1);
    uint64_t done = 0;
    for (;;) {
        for (int u = 1; u <= 8; ++u) c.set_color(u, 9, stalk[u - 1]);
        CHECK(check_claim(c, claim) == CheckOutcome::Holds);
        ++done;
        int i = 0;
        while (i < 8 && stalk[i] == 3) stalk[i++] = 1;
        if (i == 8) break;
        ++stalk[i];
    }
    CHECK(done == 6561);
}

TEST_CASE("exhaustive verification of small theorem instances") {
    auto r = exhaustive_verify(5, 2, Claim::parse("main", 2), EnumMode::Raw);
    CHECK(r.status == ClaimStatus::Verified);
    CHECK(r.checked == 1024);

    auto r2 = exhaustive_verify(4, 4, Claim::parse("conj42", 2), EnumMode::Raw);
    CHECK(r2.status == ClaimStatus::Verified);
    CHECK(r2.checked == 4096);

    auto r3 = exhaustive_verify(5, 2, Claim::parse("cockayne_lorimer", 1), EnumMode::VertexAndColor);
    CHECK(r3.status == ClaimStatus::Verified);
}

TEST_CASE("exhaustive verification refuses oversized jobs") {
    CHECK_THROWS(exhaustive_verify(10, 4, Claim::parse("missone", 0), EnumMode::Raw,
                                   {}, 1000));
}

TEST_CASE("modes agree for color-symmetric claims") {
    for (auto mode : {EnumMode::Raw, EnumMode::VertexOnly, EnumMode::VertexAndColor}) {
        auto r = exhaustive_verify(5, 2, Claim::parse("main", 2), mode);
        CHECK(r.status == ClaimStatus::Verified);
    }
}

TEST_CASE("shard merge equals the unsharded run") {
    Claim claim = Claim::parse("main", 2);
    auto whole = exhaustive_verify(5, 2, claim, EnumMode::Raw);
    std::vector<ClaimReport> parts;
    for (int i = 0; i < 4; ++i)
        parts.push_back(exhaustive_verify(5, 2, claim, EnumMode::Raw, {i, 4}));
    auto merged = merge_reports(parts);
    CHECK(merged.checked == whole.checked);
    CHECK(merged.status == whole.status);
}

TEST_CASE("random verification is deterministic and finds violations") {
    Claim claim = Claim::parse("main", 5);
    auto a = random_verify(14, 2, claim, 500, 99);
    auto b = random_verify(14, 2, claim, 500, 99);
    CHECK(a.status == ClaimStatus::SampledOk);
    CHECK(report_to_json_text(a) == report_to_json_text(b));

    auto c = random_verify(14, 2, claim, 500, 99, SampleGenerator::NearExtremal);
    CHECK(c.status == ClaimStatus::SampledOk);

    // missone at K_{2^4-2}
    auto d = random_verify(14, 4, Claim::parse("missone", 0), 1000, 7);
    CHECK(d.status == ClaimStatus::SampledOk);
    CHECK(d.checked == 1000);
}

TEST_CASE("counterexamples revalidate") {
    // conj42 below its own n bound is inapplicable; to exercise the
    // counterexample path use a falsifiable claim: conncover with s=1 on
    // 3-colorings of K_4 can fail (no spanning monochromatic component
    // needs to exist for t=3)
    auto r = exhaustive_verify(4, 3, Claim::parse("conncover", 1), EnumMode::Raw);
    if (r.status == ClaimStatus::Counterexample) {
        REQUIRE(r.counterexample.has_value());
        CHECK(check_claim(*r.counterexample, Claim::parse("conncover", 1)) ==
              CheckOutcome::Violated);
        CHECK(!r.diagnostic.empty());
    }
}

TEST_CASE("report json shape") {
    auto r = exhaustive_verify(5, 2, Claim::parse("main", 2), EnumMode::Raw, {1, 2});
    auto text = report_to_json_text(r);
    CHECK(text.find("\"claim\":\"main\"") != std::string::npos);
    CHECK(text.find("\"k\":2") != std::string::npos);
    CHECK(text.find("\"status\":\"verified\"") != std::string::npos);
    CHECK(text.find("\"shard\":[1,2]") != std::string::npos);
}
