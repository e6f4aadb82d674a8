#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl4/weights.hpp"

#include <random>

using namespace sl4;

TEST_CASE("rho is half the sum of the positive roots") {
    // positive roots in quarters: a1, a2, a3, a1+a2, a2+a3, a1+a2+a3
    const RWeight roots[6] = {{4, 0, 0}, {0, 4, 0}, {0, 0, 4},
                              {4, 4, 0}, {0, 4, 4}, {4, 4, 4}};
    RWeight sum;
    for (const RWeight& r : roots) sum = sum + r;
    CHECK(rho() == RWeight{sum.q1 / 2, sum.q2 / 2, sum.q3 / 2});
    CHECK(fweight_to_rweight({1, 1, 1}) == rho()); // (3/2, 2, 3/2)
}

TEST_CASE("fundamental to root basis") {
    CHECK(fweight_to_rweight({0, 0, 0}) == RWeight{0, 0, 0});
    CHECK(fweight_to_rweight({1, 0, 1}) == RWeight{4, 4, 4}); // (1,1,1)
    // w1 alone: (3/4, 1/2, 1/4)
    CHECK(fweight_to_rweight({1, 0, 0}) == RWeight{3, 2, 1});
}

TEST_CASE("root to fundamental basis") {
    CHECK(rweight_to_fweight({4, 4, 4}) == FWeight{1, 0, 1});
    CHECK(rweight_to_fweight({0, 0, 0}) == FWeight{0, 0, 0});
    CHECK(rweight_to_fweight({4, 0, 0}) == FWeight{2, -1, 0}); // alpha1
    CHECK(rweight_to_fweight({3, 2, 1}) == FWeight{1, 0, 0});  // w1 itself
    CHECK_THROWS_AS((void)rweight_to_fweight({1, 0, 0}), NonIntegralError);
    CHECK_THROWS_AS((void)rweight_to_fweight({4, 2, 4}), NonIntegralError);
}

TEST_CASE("integral root coordinates") {
    auto c = integral_root_coords(FWeight{2, -1, 0});
    REQUIRE(c.has_value());
    CHECK(*c == RootCoords{1, 0, 0});
    CHECK(*integral_root_coords(FWeight{0, 0, 0}) == RootCoords{0, 0, 0});
    CHECK(!integral_root_coords(FWeight{1, 0, 0}).has_value());
    CHECK(!integral_root_coords(FWeight{0, 1, 0}).has_value());
}

TEST_CASE("round trips over random integer root points") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> d(-50, 50);
    for (int i = 0; i < 500; ++i) {
        const RootCoords p{d(rng), d(rng), d(rng)};
        const FWeight w = fweight_of_root_coords(p);
        auto back = integral_root_coords(w);
        REQUIRE(back.has_value());
        CHECK(*back == p);
        CHECK(rweight_to_fweight(RWeight{4 * p.x, 4 * p.y, 4 * p.z}) == w);
        CHECK(fweight_to_rweight(w) == RWeight{4 * p.x, 4 * p.y, 4 * p.z});
    }
}

TEST_CASE("membership in the root lattice matches the divisibility test") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<long long> d(-25, 25);
    for (int i = 0; i < 2000; ++i) {
        const FWeight w{d(rng), d(rng), d(rng)};
        const bool expected = (3 * w.m + 2 * w.n + w.k) % 4 == 0 &&
                              (w.m + 2 * w.n + w.k) % 2 == 0 &&
                              (w.m + 2 * w.n + 3 * w.k) % 4 == 0;
        CHECK(integral_root_coords(w).has_value() == expected);
    }
}

TEST_CASE("basis change is linear") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long long> d(-20, 20);
    for (int i = 0; i < 300; ++i) {
        const FWeight u{d(rng), d(rng), d(rng)};
        const FWeight v{d(rng), d(rng), d(rng)};
        const long long a = d(rng), b = d(rng);
        const FWeight comb{a * u.m + b * v.m, a * u.n + b * v.n,
                           a * u.k + b * v.k};
        const RWeight fu = fweight_to_rweight(u), fv = fweight_to_rweight(v);
        CHECK(fweight_to_rweight(comb) ==
              RWeight{a * fu.q1 + b * fv.q1, a * fu.q2 + b * fv.q2,
                      a * fu.q3 + b * fv.q3});
    }
}

TEST_CASE("quarter coordinate rendering") {
    CHECK(RWeight::coord_str(6) == "3/2");
    CHECK(RWeight::coord_str(8) == "2");
    CHECK(RWeight::coord_str(0) == "0");
    CHECK(RWeight::coord_str(-3) == "-3/4");
}
