#include <doctest.h>

#include <numeric>
#include "grautkit/grading.hpp"
#include "oracles.hpp"

using namespace grautkit;

TEST_CASE("classification") {
    CHECK(classify(RawGrading{{3, 1, -1}}) == GradingClass::Mixed);
    CHECK(classify(RawGrading{{1, 2, 3}}) == GradingClass::SameSign);
    CHECK(classify(RawGrading{{-1, -2, -3}}) == GradingClass::SameSign);
    CHECK(classify(RawGrading{{0, 1, -1}}) == GradingClass::HasZero);
    CHECK(classify(RawGrading{{0, 0, 0}}) == GradingClass::Trivial);
    CHECK(classify(RawGrading{{0, 0, 5}}) == GradingClass::HasZero);
}

TEST_CASE("normalization of the reference grading") {
    NormalizedGrading g = normalize(RawGrading{{3, 1, -1}});
    CHECK(g.a == 3);
    CHECK(g.b == 1);
    CHECK(g.c == 1);
    CHECK(g.trivial_bookkeeping());
}

TEST_CASE("normalization flips a global sign") {
    NormalizedGrading g = normalize(RawGrading{{-3, -1, 1}});
    CHECK(g.a == 3);
    CHECK(g.b == 1);
    CHECK(g.c == 1);
    CHECK(g.applied_sign == -1);
    CHECK(g.reconstruct_raw() == RawGrading{{-3, -1, 1}});
}

TEST_CASE("normalization divides the gcd and permutes") {
    // (2,-6,4)/2 = (1,-3,2); negative lands on z, positives descend: a=2,b=1,c=3.
    NormalizedGrading g = normalize(RawGrading{{2, -6, 4}});
    CHECK(g.a == 2);
    CHECK(g.b == 1);
    CHECK(g.c == 3);
    CHECK(g.applied_scale == 2);
    CHECK(g.applied_permutation == std::array<int, 3>{1, 2, 0});
    CHECK(g.reconstruct_raw() == RawGrading{{2, -6, 4}});
}

TEST_CASE("normalization rejects non-mixed input") {
    CHECK_THROWS_AS(normalize(RawGrading{{1, 2, 3}}), UsageError);
    CHECK_THROWS_AS(normalize(RawGrading{{0, 1, -1}}), UsageError);
}

TEST_CASE("normalize is idempotent on its own output") {
    testing::Rng rng(37);
    int done = 0;
    while (done < 200) {
        RawGrading raw{{testing::random_int(rng, -9, 9), testing::random_int(rng, -9, 9),
                        testing::random_int(rng, -9, 9)}};
        if (classify(raw) != GradingClass::Mixed) continue;
        NormalizedGrading g = normalize(raw);
        CHECK(g.reconstruct_raw() == raw);
        NormalizedGrading again = normalize(RawGrading{{g.a, g.b, -g.c}});
        CHECK(again.a == g.a);
        CHECK(again.b == g.b);
        CHECK(again.c == g.c);
        CHECK(again.trivial_bookkeeping());
        ++done;
    }
}

TEST_CASE("wildness certificates") {
    auto cert = admits_wild(normalize(RawGrading{{3, 1, -1}}));
    REQUIRE(cert.has_value());
    CHECK(cert->p == 1);
    CHECK(cert->q == 2);

    NormalizedGrading no_cert;
    no_cert.a = 3;
    no_cert.b = 2;
    no_cert.c = 1;
    CHECK(!admits_wild(no_cert).has_value());

    NormalizedGrading g832;
    g832.a = 8;
    g832.b = 3;
    g832.c = 2;
    auto c832 = admits_wild(g832);
    REQUIRE(c832.has_value());
    CHECK(c832->p == 1);
    CHECK(c832->q == 2);
}

TEST_CASE("admits_wild agrees with brute force up to 30") {
    for (long a = 1; a <= 30; ++a) {
        for (long b = 1; b <= a; ++b) {
            for (long c = 1; c <= 30; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                NormalizedGrading g;
                g.a = a;
                g.b = b;
                g.c = c;
                auto fast = admits_wild(g);
                auto slow = testing::brute_force_wild(a, b, c);
                CHECK(fast == slow);
                if (fast) {
                    CHECK(c * fast->p + b * fast->q == a);
                    CHECK(fast->q >= 2);
                    CHECK(fast->p >= 1);
                    CHECK(a > b);
                }
            }
        }
    }
}

TEST_CASE("induced cyclic grading") {
    NormalizedGrading g311 = normalize(RawGrading{{3, 1, -1}});
    CHECK(induced_cyclic(g311) == CyclicGrading{1, 0, 0});

    NormalizedGrading g832;
    g832.a = 8;
    g832.b = 3;
    g832.c = 2;
    CHECK(induced_cyclic(g832) == CyclicGrading{2, 0, 1});

    NormalizedGrading g532;
    g532.a = 5;
    g532.b = 3;
    g532.c = 2;
    CHECK(induced_cyclic(g532) == CyclicGrading{2, 1, 1});
}

TEST_CASE("grading text parsing") {
    CHECK(parse_raw_grading("3 1 -1") == RawGrading{{3, 1, -1}});
    CHECK(parse_raw_grading("  2  -6   4 ") == RawGrading{{2, -6, 4}});
    CHECK_THROWS_AS(parse_raw_grading("3 1"), UsageError);
    CHECK_THROWS_AS(parse_raw_grading("3 1 -1 7"), UsageError);
    CHECK_THROWS_AS(parse_raw_grading("a b c"), UsageError);
}
