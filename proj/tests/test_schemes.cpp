#include <doctest.h>

#include "sldic/scheme.hpp"
#include "support.hpp"

using namespace sldic;

TEST_CASE("regime classification") {
    CHECK(classify_regime({4, 2, 0}) == Regime::weak);
    CHECK(classify_regime({5, 0, 0}) == Regime::weak);
    CHECK(classify_regime({3, 2, 0}) == Regime::weak);   // alpha = 2/3 exactly
    CHECK(classify_regime({6, 4, 0}) == Regime::weak);   // alpha = 2/3 exactly
    CHECK(classify_regime({5, 4, 0}) == Regime::moderate);
    CHECK(classify_regime({4, 3, 0}) == Regime::moderate);
    CHECK(classify_regime({3, 3, 0}) == Regime::unity);
    CHECK(classify_regime({3, 5, 0}) == Regime::high);
    CHECK(classify_regime({2, 4, 0}) == Regime::very_high);
    CHECK(classify_regime({2, 5, 0}) == Regime::very_high);
    CHECK(classify_regime({0, 3, 0}) == Regime::very_high);  // cross link only
    CHECK_THROWS_AS(classify_regime({0, 0, 1}), DegenerateChannelError);
    CHECK_THROWS_AS(classify_regime({-1, 2, 0}), ParameterError);
}

TEST_CASE("weak builder") {
    CHECK(build_weak({4, 2, 0}).rate == RateResult{2, 1});
    CHECK(build_weak({4, 2, 2}).rate == RateResult{4, 1});
    CHECK(build_weak({5, 0, 0}).rate == RateResult{5, 1});
    CHECK_THROWS_AS(build_weak({5, 4, 0}), RegimeError);

    SUBCASE("excess cooperation is discarded") {
        const SchemeDescription s = build_weak({4, 2, 5});
        CHECK(s.rate == RateResult{4, 1});  // capped at max{m,n}
        CHECK(s.coop_ledger[0].w2_to_tx1.size() == 2);
        CHECK(validate_budget(s));
    }

    SUBCASE("layout and shapes") {
        const SchemeDescription s = build_weak({4, 2, 2});
        CHECK(s.layout.w1_len == 4);
        CHECK(s.layout.d_len == 0);
        REQUIRE(s.slots.size() == 1);
        CHECK(s.slots[0].g1.rows() == 4);
        CHECK(s.slots[0].g1.cols() == s.layout.total());
    }

    SUBCASE("rate m = max{m,n} whenever C >= n") {
        for (int m = 1; m <= 8; ++m)
            for (int n = 0; 3 * n <= 2 * m; ++n)
                CHECK(build_weak({m, n, n}).rate == RateResult{m, 1});
    }
}

TEST_CASE("moderate breakdown quantities") {
    // m=5, n=4, C=0: g = 3 usable levels make exactly one full block.
    const auto bd = moderate_breakdown({5, 4, 0});
    CHECK(bd.r1 == 1);
    CHECK(bd.r2 == 1);
    CHECK(bd.type3 == 3);
    CHECK(bd.usable == 3);
    CHECK(bd.full_blocks == 1);
    CHECK(bd.remainder == 0);
    CHECK(bd.extra_data == 0);

    // link-count identities: r1 = r2 = (m - l)/2 = m - n, l = 2n - m
    for (const ChannelParams& p : test::supported_grid(9)) {
        if (classify_regime(p) != Regime::moderate) continue;
        const auto b = moderate_breakdown(p);
        CHECK(b.r1 == b.r2);
        CHECK(b.r2 == p.m - p.n);
        CHECK(b.type3 == 2 * p.n - p.m);
        CHECK(b.r2 == (p.m - b.type3) / 2);
        CHECK(b.r2 + b.type3 + b.r1 == p.m);
    }
}

TEST_CASE("moderate builder") {
    CHECK(build_moderate({5, 4, 0}).rate == RateResult{2, 1});
    CHECK(build_moderate({5, 4, 1}).rate == RateResult{3, 1});
    CHECK(build_moderate({5, 4, 4}).rate == RateResult{5, 1});
    CHECK_THROWS_AS(build_moderate({4, 2, 0}), RegimeError);

    SUBCASE("m=5 n=4 C=0 level placement") {
        // Bottom data on level 1, a gap on 2, zero band on 3, random on 4,
        // data on 5.
        const SchemeDescription s = build_moderate({5, 4, 0});
        CHECK(s.layout.w1_len == 2);
        CHECK(s.layout.d_len == 1);
        const BitMatrix& g1 = s.slots[0].g1;
        CHECK(g1.get(4, s.layout.w1_col(0)));  // level 1 = row 4
        CHECK(g1.get(0, s.layout.w1_col(1)));  // level 5 = row 0
        CHECK(g1.get(1, s.layout.d_col(0)));   // level 4 = row 1
        // levels 2 and 3 are silent
        CHECK(g1.row_string(3) == std::string(s.layout.total(), '0'));
        CHECK(g1.row_string(2) == std::string(s.layout.total(), '0'));
    }

    SUBCASE("excess cooperation is discarded") {
        const SchemeDescription s = build_moderate({5, 4, 9});
        CHECK(s.rate == RateResult{5, 1});
        CHECK(s.coop_ledger[0].w2_to_tx1.size() == 4);
        CHECK(validate_budget(s));
    }

    SUBCASE("partial block with remainder above 2*r2") {
        // m=9, n=7: r2 = 2, C=0 gives g = 5, so B = 0, t = 5, q_extra = 2.
        const auto bd = moderate_breakdown({9, 7, 0});
        CHECK(bd.full_blocks == 0);
        CHECK(bd.remainder == 5);
        CHECK(bd.extra_data == 2);
        CHECK(build_moderate({9, 7, 0}).rate == RateResult{4, 1});
    }
}

TEST_CASE("unity builder") {
    CHECK(build_unity({3, 3, 0}).rate == RateResult{0, 1});
    CHECK(build_unity({3, 3, 3}).rate == RateResult{0, 1});
    CHECK(build_unity({1, 1, 0}).rate == RateResult{0, 1});
    CHECK(build_unity({3, 3, 0}).layout.total() == 0);
}

TEST_CASE("very high builder, alpha = 2") {
    CHECK(build_very_high_alpha2({2, 4, 0}).rate == RateResult{0, 1});
    CHECK(build_very_high_alpha2({2, 4, 1}).rate == RateResult{1, 1});
    CHECK(build_very_high_alpha2({2, 4, 2}).rate == RateResult{5, 2});
    CHECK(build_very_high_alpha2({2, 4, 3}).rate == RateResult{3, 1});
    CHECK(build_very_high_alpha2({2, 4, 4}).rate == RateResult{4, 1});
    CHECK(build_very_high_alpha2({2, 4, 9}).rate == RateResult{4, 1});  // C > n capped

    CHECK_THROWS_AS(build_very_high_alpha2({3, 6, 1}), UnsupportedCaseError);  // odd m
    CHECK_THROWS_AS(build_very_high_alpha2({2, 5, 1}), UnsupportedCaseError);  // n != 2m
    CHECK_THROWS_AS(build_very_high_alpha2({4, 2, 1}), RegimeError);

    SUBCASE("two-slot scheme shares fresh bits per slot") {
        const SchemeDescription s = build_very_high_alpha2({2, 4, 2});
        REQUIRE(s.slots.size() == 2);
        CHECK(s.layout.w1_len == 5);
        CHECK(s.layout.d_len == 2);
        CHECK(s.coop_ledger[0].e_to_tx1 == std::vector<std::size_t>{0});
        CHECK(s.coop_ledger[1].e_to_tx1 == std::vector<std::size_t>{1});
        CHECK(s.coop_ledger[0].w2_to_tx1.size() == 1);
        CHECK(validate_budget(s));
    }
}

TEST_CASE("regime dispatcher") {
    CHECK(build({4, 2, 2}).rate == RateResult{4, 1});
    CHECK(build({5, 4, 1}).rate == RateResult{3, 1});
    CHECK(build({3, 3, 2}).rate == RateResult{0, 1});
    CHECK(build({2, 4, 2}).rate == RateResult{5, 2});
    CHECK_THROWS_AS(build({3, 5, 1}), UnsupportedCaseError);   // 1 < alpha < 2 deferred
    CHECK_THROWS_AS(build({2, 5, 1}), UnsupportedCaseError);   // alpha = 5/2 deferred
    CHECK_THROWS_AS(build({3, 6, 1}), UnsupportedCaseError);   // alpha = 2, odd m
    CHECK_THROWS_AS(build({0, 0, 1}), DegenerateChannelError);

    SUBCASE("no direct link: rate 0, flagged as very_high rather than unity") {
        const SchemeDescription s = build({0, 3, 1});
        CHECK(s.rate == RateResult{0, 1});
        CHECK(s.regime == Regime::very_high);
    }

    SUBCASE("unsupported errors carry the regime tag") {
        try {
            build({3, 5, 1});
            FAIL("expected UnsupportedCaseError");
        } catch (const UnsupportedCaseError& e) {
            CHECK(e.regime == "high");
        }
    }
}

TEST_CASE("every builder output respects the cooperation budget") {
    for (const ChannelParams& p : test::supported_grid(6)) {
        const SchemeDescription s = build(p);
        CAPTURE(p.m);
        CAPTURE(p.n);
        CAPTURE(p.C);
        CHECK(validate_budget(s));
        // shape invariant: q rows, layout-total columns in every slot
        for (const TimeSlot& slot : s.slots) {
            CHECK(slot.g1.rows() == static_cast<std::size_t>(p.q()));
            CHECK(slot.g1.cols() == s.layout.total());
            CHECK(slot.g2.rows() == static_cast<std::size_t>(p.q()));
            CHECK(slot.g2.cols() == s.layout.total());
        }
        // delivered message bits per period = rate numerator
        CHECK(s.rate.numerator == static_cast<std::int64_t>(s.layout.w1_len));
        CHECK(s.rate.denominator == static_cast<std::int64_t>(s.slots.size()));
    }
}

TEST_CASE("validate_budget rejects over-budget and acausal schemes") {
    SchemeDescription s = build({4, 2, 2});

    SUBCASE("an undeclared cooperative reference fails") {
        // reference one more W2 column than the ledger declares
        s.slots[0].g1.set(0, s.layout.w2_col(0), true);
        CHECK_FALSE(validate_budget(s));
    }

    SUBCASE("declaring more than C new bits in one slot fails") {
        SchemeDescription t = build({4, 2, 1});
        t.coop_ledger[0].w2_to_tx1 = {0, 1, 2};
        CHECK_FALSE(validate_budget(t));
    }

    SUBCASE("unity scheme uses no cooperation") {
        CHECK(validate_budget(build_unity({3, 3, 0})));
    }
}

TEST_CASE("scheme JSON round trip") {
    for (const ChannelParams& p : test::supported_grid(4)) {
        const SchemeDescription s = build(p);
        const SchemeDescription back = scheme_from_json_string(to_json_string(s));
        CHECK(back == s);
    }
    CHECK_THROWS_AS(scheme_from_json_string(R"({"params":{"m":2,"n":1,"C":0,"q":2},
        "regime":"weak","layout":{"w1_len":1,"w2_len":0,"d_len":0,"e_len":0,"total":1},
        "rate":"1/1","slots":[{"G1":["10"],"G2":["0"],
        "coop":{"w2_to_tx1":[],"e_to_tx1":[],"w1_to_tx2":[],"d_to_tx2":[]}}]})"),
                    MalformedSchemeError);  // row wider than the layout
}

TEST_CASE("gaussian parameters map into buildable schemes") {
    // |h_d|^2 = 32, |h_c|^2 = 4 is a weak-interference deterministic model
    // with m = 5, n = 2.
    const ChannelParams p = from_gaussian({32.0, 4.0, 1.5});
    CHECK(p == ChannelParams{5, 2, 1});
    CHECK(classify_regime(p) == Regime::weak);
    CHECK(build(p).rate == RateResult{4, 1});
}
