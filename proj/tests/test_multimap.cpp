#include "nielsen/multimap.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace nielsen;

namespace {

// Independent degree oracle: the total winding of a valid map is the sum of
// the branch displacements.
long long displacement_degree(const MultiMap& m) {
    Rational sum = 0;
    for (const auto& br : m.branches()) {
        sum += br.end_value() - br.start_value();
    }
    REQUIRE(is_integer(sum));
    return static_cast<long long>(numerator(sum));
}

}  // namespace

TEST_CASE("power map construction") {
    MultiMap two = make_power_map(2, 1);
    REQUIRE(two.valence() == 2);
    CHECK(two.branch(0).start_value() == 0);
    CHECK(two.branch(0).end_value() == Rational(1, 2));
    CHECK(two.branch(1).start_value() == Rational(1, 2));
    CHECK(two.branch(1).end_value() == 1);

    MultiMap constant = make_power_map(1, 0);
    CHECK(constant.branch(0).start_value() == 0);
    CHECK(constant.branch(0).end_value() == 0);

    MultiMap six = make_power_map(6, 2);
    REQUIRE(six.valence() == 6);
    for (int u = 0; u < 6; ++u) {
        CHECK(six.branch(u).start_value() == Rational(u, 6));
        CHECK(six.branch(u).end_value() - six.branch(u).start_value() == Rational(1, 3));
    }

    CHECK_THROWS_AS(make_power_map(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_power_map(-2, 1), std::invalid_argument);
}

TEST_CASE("validation") {
    CHECK(validate(make_power_map(3, 4)).ok());

    SUBCASE("integer-translate branches always cross mod 1") {
        MultiMap bad({make_segment(Rational(0), Rational(1)),
                      make_segment(Rational(1), Rational(2))});
        ValidationReport report = validate(bad);
        CHECK(report.kind == ValidationReport::Kind::branches_cross);
        CHECK(report.detail.find("t = 0") != std::string::npos);
    }
    SUBCASE("crossing interior branches are caught with a witness") {
        MultiMap bad({make_segment(Rational(0), Rational(1, 2)),
                      make_segment(Rational(1, 2), Rational(0))});
        ValidationReport report = validate(bad);
        CHECK(report.kind == ValidationReport::Kind::branches_cross);
        CHECK(report.detail.find("t = 1/2") != std::string::npos);
    }
    SUBCASE("closure of {t, t + 1/2}") {
        MultiMap ok({make_segment(Rational(0), Rational(1)),
                     make_segment(Rational(1, 2), Rational(3, 2))});
        CHECK(validate(ok).ok());
    }
    SUBCASE("broken closure") {
        MultiMap bad({make_segment(Rational(0), Rational(1, 3))});
        ValidationReport report = validate(bad);
        CHECK(report.kind == ValidationReport::Kind::closure_mismatch);
        CHECK(report.detail.find("{1/3}") != std::string::npos);
        CHECK(report.detail.find("{0}") != std::string::npos);
    }
}

TEST_CASE("evaluate") {
    CHECK(evaluate(make_power_map(2, 1), UnitPoint(Rational(0))) ==
          std::vector<UnitPoint>{UnitPoint(Rational(0)), UnitPoint(Rational(1, 2))});
    CHECK(evaluate(make_power_map(1, 1), UnitPoint(Rational(3, 7))) ==
          std::vector<UnitPoint>{UnitPoint(Rational(3, 7))});
    CHECK(evaluate(make_power_map(3, -1), UnitPoint(Rational(1, 2))) ==
          std::vector<UnitPoint>{UnitPoint(Rational(1, 6)), UnitPoint(Rational(1, 2)),
                                 UnitPoint(Rational(5, 6))});
}

TEST_CASE("degree") {
    CHECK(degree(make_power_map(3, 4)) == 4);
    CHECK(degree(MultiMap({make_segment(Rational(0), Rational(1))})) == 1);

    SUBCASE("wiggled 2-valued lift still has degree 1") {
        MultiMap m({LiftBranch{{{Rational(0), Rational(0)},
                                {Rational(1, 2), Rational(1, 3)},
                                {Rational(1), Rational(1, 2)}}},
                    LiftBranch{{{Rational(0), Rational(1, 2)},
                                {Rational(1, 2), Rational(5, 6)},
                                {Rational(1), Rational(1)}}}});
        REQUIRE(validate(m).ok());
        CHECK(degree(m) == 1);
        CHECK(displacement_degree(m) == 1);
    }
    SUBCASE("degree law, exhaustive small range, against the displacement oracle") {
        for (int n = 1; n <= 6; ++n) {
            for (int d = -6; d <= 6; ++d) {
                MultiMap m = make_power_map(n, d);
                CHECK(degree(m) == d);
                CHECK(displacement_degree(m) == d);
            }
        }
    }
    SUBCASE("randomized valid perturbations agree with the displacement oracle") {
        std::mt19937_64 rng(424242);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 1 + static_cast<int>(rng() % 5);
            int a = static_cast<int>(rng() % 11) - 5;
            MultiMap m = nielsen::testing::wiggled_power_map(n, a, rng);
            REQUIRE(validate(m).ok());
            CHECK(degree(m) == a);
            CHECK(degree(m) == displacement_degree(m));
        }
    }
    SUBCASE("closure violation is an error") {
        MultiMap bad({make_segment(Rational(0), Rational(1, 3))});
        CHECK_THROWS_AS(degree(bad), std::invalid_argument);
    }
}

TEST_CASE("vertical translation") {
    MultiMap two = make_power_map(2, 1);
    CHECK(maps_equal(translate_vertical(two, Rational(0)), two));

    MultiMap shifted = translate_vertical(make_power_map(1, 1), Rational(1, 4));
    CHECK(shifted.branch(0).start_value() == Rational(1, 4));
    CHECK(shifted.branch(0).end_value() == Rational(5, 4));

    // shift by 1/2 permutes the branches of phi_{2,2}
    MultiMap doubled = make_power_map(2, 2);
    CHECK(maps_equal(translate_vertical(doubled, Rational(1, 2)), doubled));

    SUBCASE("translation preserves validity and degree") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long long> num(-20, 20);
        std::uniform_int_distribution<long long> den(1, 20);
        for (int n = 1; n <= 4; ++n) {
            for (int d = -4; d <= 4; ++d) {
                Rational c(num(rng), den(rng));
                MultiMap m = translate_vertical(make_power_map(n, d), c);
                CHECK(validate(m).ok());
                CHECK(degree(m) == d);
            }
        }
    }
}

TEST_CASE("block invariance") {
    CHECK(block_invariance_check(make_power_map(6, 2), 3));
    CHECK(block_invariance_check(make_power_map(6, 2), 2));
    CHECK(block_invariance_check(make_power_map(4, 1), 2));
    CHECK(block_invariance_check(make_power_map(5, 3), 1));
    for (int n = 1; n <= 8; ++n) {
        for (int a = -3; a <= 3; ++a) {
            for (int w = 1; w <= n; ++w) {
                if (n % w == 0) {
                    CHECK(block_invariance_check(make_power_map(n, a), w));
                }
            }
        }
    }
    CHECK_THROWS_AS(block_invariance_check(make_power_map(4, 1), 3), std::invalid_argument);

    SUBCASE("a generic non-power map is not block invariant") {
        MultiMap m({LiftBranch{{{Rational(0), Rational(0)},
                                {Rational(1, 2), Rational(1, 5)},
                                {Rational(1), Rational(1, 4)}}},
                    make_segment(Rational(1, 4), Rational(1, 2)),
                    make_segment(Rational(1, 2), Rational(3, 4)),
                    make_segment(Rational(3, 4), Rational(1))});
        REQUIRE(validate(m).ok());
        CHECK(!block_invariance_check(m, 2));
    }
}

TEST_CASE("bottom block restriction") {
    BottomBlock b62 = restrict_bottom_block(make_power_map(6, 2), 3);
    REQUIRE(b62.branches.size() == 2);
    for (const auto& br : b62.branches) {
        CHECK(br.start_value() < Rational(1, 3));
    }

    BottomBlock full = restrict_bottom_block(make_power_map(5, 2), 1);
    CHECK(full.branches.size() == 5);

    BottomBlock b42 = restrict_bottom_block(make_power_map(4, 2), 2);
    REQUIRE(b42.branches.size() == 2);
    for (const auto& br : b42.branches) {
        CHECK(br.end_value() - br.start_value() == Rational(1, 2));
        CHECK(br.start_value() < Rational(1, 2));
    }

    CHECK_THROWS_AS(restrict_bottom_block(make_power_map(4, 2), 3), std::invalid_argument);
    SUBCASE("defined for power maps only") {
        std::mt19937_64 rng(5);
        MultiMap wiggled = nielsen::testing::wiggled_power_map(4, 2, rng);
        CHECK_THROWS_AS(restrict_bottom_block(wiggled, 2), std::invalid_argument);
    }
}

TEST_CASE("homotopy classification by valence and degree") {
    CHECK(homotopy_equivalent(make_power_map(2, 1), make_power_map(2, 1)));
    CHECK(!homotopy_equivalent(make_power_map(2, 1), make_power_map(2, 3)));
    CHECK(!homotopy_equivalent(make_power_map(2, 1), make_power_map(3, 1)));
    std::mt19937_64 rng(3);
    MultiMap wiggled = nielsen::testing::wiggled_power_map(3, -2, rng);
    CHECK(homotopy_equivalent(wiggled, make_power_map(3, -2)));
}

TEST_CASE("evaluate returns exactly n distinct values on valid maps") {
    std::mt19937_64 rng(1009);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        int a = static_cast<int>(rng() % 11) - 5;
        MultiMap m = nielsen::testing::wiggled_power_map(n, a, rng);
        for (int i = 0; i < 5; ++i) {
            UnitPoint x(Rational(static_cast<long long>(rng() % 64), 64));
            std::vector<UnitPoint> values = evaluate(m, x);
            REQUIRE(values.size() == static_cast<std::size_t>(n));
            CHECK(std::adjacent_find(values.begin(), values.end()) == values.end());
        }
    }
}
