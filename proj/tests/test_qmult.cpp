#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl4/qmult.hpp"

#include <random>

using namespace sl4;

namespace {

QPoly poly_of(std::initializer_list<std::pair<long long, long long>> terms) {
    QPoly p;
    for (auto [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
}

} // namespace

TEST_CASE("z table bindings") {
    const auto& table = z_table();
    REQUIRE(table.size() == 11);
    // Z5 belongs to s2s3 and evaluates (P1, Q5, R4)
    const ZEntry& z5 = table[4];
    CHECK(z5.z_index == 5);
    CHECK(all_elements()[z5.element_index].word == std::string("s2s3"));
    CHECK(z5.triple.p == PComp::P1);
    CHECK(z5.triple.q == QComp::Q5);
    CHECK(z5.triple.r == RComp::R4);
    // every entry reuses the element's own component triple
    for (const ZEntry& e : table) {
        CHECK(e.triple.p == all_elements()[e.element_index].pqr.p);
        CHECK(e.triple.q == all_elements()[e.element_index].pqr.q);
        CHECK(e.triple.r == all_elements()[e.element_index].pqr.r);
    }
}

TEST_CASE("worked multiplicity examples") {
    // adjoint highest weight, zero weight space
    CHECK(mq_direct({1, 0, 1}, {0, 0, 0}) ==
          poly_of({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(mq_closed({1, 0, 1}, {0, 0, 0}) ==
          poly_of({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(multiplicity({1, 0, 1}, {0, 0, 0}) == BigInt(3));

    CHECK(mq_direct({1, 2, 3}, {1, 1, 1}) ==
          poly_of({{2, 1}, {3, 3}, {4, 2}, {5, 1}}));
    CHECK(multiplicity({1, 2, 3}, {1, 1, 1}) == BigInt(7));

    const MqResult r = mq_closed_case({1, 3, 0}, {1, 1, 0});
    CHECK(r.poly == poly_of({{2, 1}, {3, 1}, {4, 1}}));
    CHECK(r.case_name == "Z1 - Z3");
    CHECK(multiplicity({1, 3, 0}, {1, 1, 0}) == BigInt(3));
}

TEST_CASE("trivial cases") {
    CHECK(mq_direct({0, 0, 0}, {0, 0, 0}) == QPoly::one());
    CHECK(mq_closed({0, 0, 0}, {0, 0, 0}) == QPoly::one());
    // highest weight itself always has multiplicity one
    for (FWeight lam : {FWeight{3, 1, 2}, FWeight{0, 5, 0}, FWeight{7, 7, 7}})
        CHECK(mq_closed(lam, lam) == QPoly::one());
    // lambda - mu outside the root lattice
    CHECK(mq_closed({1, 0, 0}, {0, 1, 0}).is_zero());
    CHECK(mq_direct({1, 0, 0}, {0, 1, 0}).is_zero());
}

TEST_CASE("dominance is enforced on the closed path") {
    CHECK_THROWS_AS((void)mq_closed({-1, 0, 0}, {0, 0, 0}),
                    PreconditionError);
    CHECK_THROWS_AS((void)multiplicity({1, 0, 1}, {0, -1, 0}),
                    PreconditionError);
    // the direct sum works for any integral weights
    CHECK(mq_direct({-1, 0, 0}, {0, 0, 0}).is_zero());
}

TEST_CASE("closed equals direct on a cube of dominant pairs") {
    for (long long m = 0; m <= 4; ++m)
        for (long long n = 0; n <= 4; ++n)
            for (long long k = 0; k <= 4; ++k)
                for (long long c1 = 0; c1 <= 4; ++c1)
                    for (long long c2 = 0; c2 <= 4; ++c2)
                        for (long long c3 = 0; c3 <= 4; ++c3) {
                            const FWeight lam{m, n, k}, mu{c1, c2, c3};
                            const MqResult r = mq_closed_case(lam, mu);
                            INFO("lambda=(" << m << "," << n << "," << k << ") mu=(" << c1 << "," << c2 << "," << c3 << ") case " << r.case_name);
                            CHECK(r.poly == mq_direct(lam, mu));
                            CHECK(r.poly.coeffs_nonnegative());
                        }
}

TEST_CASE("deep dominant weights exercise the six-term combinations") {
    // lambda = 8*w3 lands in the guard whose set is
    // {1,s1,s2,s1s2,s2s1,s1s2s1}; the combination must carry -Z11, not -Z3.
    const FWeight lam{0, 0, 8}, mu{0, 0, 0};
    const MqResult r = mq_closed_case(lam, mu);
    CHECK(r.case_name == "Z1 - Z6 - Z11 + Z4 + Z8 - Z2");
    CHECK(r.poly == mq_direct(lam, mu));
    CHECK(altset(lam, mu).str() == "{1,s1,s2,s1s2,s2s1,s1s2s1}");
    // mirrored configuration goes through the six-term row with -Z7
    const MqResult rm = mq_closed_case({8, 0, 0}, {0, 0, 0});
    CHECK(rm.case_name == "Z1 - Z11 - Z3 + Z5 + Z10 - Z7");
    CHECK(rm.poly == mq_direct({8, 0, 0}, {0, 0, 0}));
}

TEST_CASE("closed equals direct on random deep dominant pairs") {
    std::mt19937 rng(202);
    std::uniform_int_distribution<long long> d(0, 25);
    for (int i = 0; i < 20000; ++i) {
        const FWeight lam{d(rng), d(rng), d(rng)};
        const FWeight mu{d(rng), d(rng), d(rng)};
        const MqResult r = mq_closed_case(lam, mu);
        INFO("lambda=(" << lam.m << "," << lam.n << "," << lam.k << ") mu=("
                        << mu.m << "," << mu.n << "," << mu.k << ") case "
                        << r.case_name);
        CHECK(r.poly == mq_direct(lam, mu));
        CHECK(r.poly.coeffs_nonnegative());
    }
}

TEST_CASE("guards are mutually exclusive") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long long> d(0, 9);
    for (int i = 0; i < 4000; ++i) {
        const FWeight lam{d(rng), d(rng), d(rng)};
        const FWeight mu{d(rng), d(rng), d(rng)};
        const auto xyz = integral_root_coords(lam - mu);
        if (!xyz) continue;
        const PQRValues v = pqr_values(*xyz, mu);
        // count matching guards through the public API by consistency:
        // the selected case must reproduce the direct sum
        const MqResult r = mq_closed_case(lam, mu);
        CHECK(r.poly == mq_direct(lam, mu));
        (void)v;
    }
}

TEST_CASE("vanishing set on dominant pairs") {
    const auto vanished = vanished_elements_check({3, 1, 2}, {1, 0, 1});
    CHECK(vanished.size() == 13);
    bool has_longest = false, has_s3s1s2 = false;
    for (const WeylElement* e : vanished) {
        if (std::string(e->word) == "s1s2s3s1s2s1") has_longest = true;
        if (std::string(e->word) == "s3s1s2") has_s3s1s2 = true;
        CHECK(std::string(e->word) != "s2s3s2");
        CHECK(std::string(e->word) != "s1s2s1");
    }
    CHECK(has_longest);
    CHECK(has_s3s1s2);
    CHECK_THROWS_AS((void)vanished_elements_check({-1, 0, 0}, {0, 0, 0}),
                    PreconditionError);
}

TEST_CASE("reported case names are stable") {
    CHECK(mq_closed_case({1, 0, 1}, {0, 0, 0}).case_name == "Z1 - Z11");
    CHECK(mq_closed_case({0, 0, 0}, {0, 0, 0}).case_name == "Z1");
    CHECK(mq_closed_case({1, 0, 0}, {0, 1, 0}).case_name == "0");
    CHECK(mq_closed_case({1, 0, 0}, {0, 1, 0}).case_id == 15);
}
