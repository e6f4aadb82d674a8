#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl4/qpartition.hpp"

#include <random>

using namespace sl4;

namespace {

QPoly poly_of(std::initializer_list<std::pair<long long, long long>> terms) {
    QPoly p;
    for (auto [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
}

} // namespace

TEST_CASE("oracle values on worked examples") {
    CHECK(oracle_triple_sum({0, 0, 0}) == QPoly::one());
    CHECK(oracle_triple_sum({1, 2, 2}) ==
          poly_of({{2, 1}, {3, 3}, {4, 2}, {5, 1}}));
    CHECK(oracle_triple_sum({1, 2, 0}) == poly_of({{2, 1}, {3, 1}}));
    CHECK(oracle_triple_sum({-1, 0, 0}).is_zero());

    CHECK(oracle_vector_partitions({1, 0, 1}) == poly_of({{2, 1}}));
    CHECK(oracle_vector_partitions({1, 1, 1}) ==
          poly_of({{1, 1}, {2, 2}, {3, 1}}));
    CHECK(oracle_vector_partitions({-1, 0, 0}).is_zero());
    CHECK(oracle_vector_partitions({0, 0, 0}) == QPoly::one());
}

TEST_CASE("closed form values on worked examples") {
    CHECK(closed_qpartition({1, 1, 1}) == poly_of({{1, 1}, {2, 2}, {3, 1}}));
    CHECK(closed_qpartition({1, 2, 2}) ==
          poly_of({{2, 1}, {3, 3}, {4, 2}, {5, 1}}));
    CHECK(closed_qpartition({0, 0, 0}) == QPoly::one());
    CHECK(closed_qpartition({0, -3, 2}).is_zero());
}

TEST_CASE("closed form equals both oracles on a full cube") {
    for (long long m = 0; m <= 8; ++m)
        for (long long n = 0; n <= 8; ++n)
            for (long long k = 0; k <= 8; ++k) {
                const AlphaTriple xi{m, n, k};
                const QPoly closed = closed_qpartition(xi);
                INFO("at (" << m << "," << n << "," << k << ")");
                CHECK(closed == oracle_triple_sum(xi));
                CHECK(closed == oracle_vector_partitions(xi));
                CHECK(closed.coeffs_nonnegative());
            }
}

TEST_CASE("all applicable ordering branches agree on boundaries") {
    for (long long m = 0; m <= 7; ++m)
        for (long long n = 0; n <= 7; ++n)
            for (long long k = 0; k <= 7; ++k) {
                const AlphaTriple xi{m, n, k};
                const QPoly expected = closed_qpartition(xi);
                for (ClosedCase c :
                     {ClosedCase::MKgeN, ClosedCase::MgeNgeK,
                      ClosedCase::KgeNgeM, ClosedCase::NgeMgeK,
                      ClosedCase::NgeKgeM}) {
                    if (!closed_case_applies(c, xi)) continue;
                    INFO("at (" << m << "," << n << "," << k << ") case " << (int)c);
                    CHECK(closed_qpartition_case(xi, c) == expected);
                }
                CHECK(closed_qpartition_via_mirror(xi) == expected);
            }
    CHECK_THROWS_AS(
        (void)closed_qpartition_case({0, 5, 0}, ClosedCase::MKgeN),
        PreconditionError);
}

TEST_CASE("mirror swap") {
    CHECK(mirror({1, 2, 3}) == AlphaTriple{3, 2, 1});
    CHECK(mirror({2, 2, 2}) == AlphaTriple{2, 2, 2});
    CHECK(closed_qpartition({1, 2, 3}) == closed_qpartition({3, 2, 1}));
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> d(0, 20);
    for (int i = 0; i < 200; ++i) {
        const AlphaTriple xi{d(rng), d(rng), d(rng)};
        CHECK(closed_qpartition(xi) == closed_qpartition(mirror(xi)));
    }
}

TEST_CASE("colored partition counts") {
    const long long big = 1LL << 40;
    CHECK(colored_partitions(4, big, big, big) == BigInt(9));
    CHECK(colored_partitions(0, 0, 0, 0) == BigInt(1));
    CHECK(colored_partitions(0, 5, 3, 2) == BigInt(1));
    CHECK(colored_partitions(-1, 5, 3, 2) == BigInt(0));
    // coefficient of q^3 in the (1,2,2) polynomial is 3; t = m+n+k-3 = 2
    CHECK(colored_partitions(2, 1, 2, 2) == BigInt(3));
}

TEST_CASE("colored partitions count coefficients (bijection)") {
    for (long long m = 0; m <= 6; ++m)
        for (long long n = 0; n <= 6; ++n)
            for (long long k = 0; k <= 6; ++k) {
                const QPoly p = oracle_vector_partitions({m, n, k});
                for (long long t = 0; t <= m + n + k + 1; ++t) {
                    INFO("at (" << m << "," << n << "," << k << ") t=" << t);
                    CHECK(colored_partitions(t, m, n, k) ==
                          p.coeff(m + n + k - t));
                }
            }
}

TEST_CASE("total count formulas") {
    CHECK(closed_partition_count({5, 2, 7}) == BigInt(10)); // (3*4*5)/6
    CHECK(closed_partition_count({0, 0, 0}) == BigInt(1));
    CHECK(closed_partition_count({1, 2, 2}) == BigInt(7));
    CHECK_THROWS_AS((void)closed_partition_count({-1, 2, 2}),
                    NegativeInputError);
}

TEST_CASE("count cases agree with eval-at-1 including overlaps") {
    for (long long m = 0; m <= 10; ++m)
        for (long long n = 0; n <= 10; ++n)
            for (long long k = 0; k <= 10; ++k) {
                const AlphaTriple xi{m, n, k};
                const BigInt total = closed_qpartition(xi).eval_at_one();
                CHECK(closed_partition_count(xi) == total);
                for (CountCase c :
                     {CountCase::MKgeN, CountCase::MgeNgeK, CountCase::KgeNgeM,
                      CountCase::NgeMgeK_Wide, CountCase::NgeKgeM_Wide,
                      CountCase::NgeMgeK_Narrow, CountCase::NgeKgeM_Narrow}) {
                    if (!count_case_applies(c, xi)) continue;
                    INFO("at (" << m << "," << n << "," << k << ") case " << (int)c);
                    CHECK(closed_partition_count_case(xi, c) == total);
                }
            }
}

TEST_CASE("support bounds per ordering case") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long long> d(0, 30);
    for (int i = 0; i < 400; ++i) {
        const long long m = d(rng), n = d(rng), k = d(rng);
        const QPoly p = closed_qpartition({m, n, k});
        REQUIRE(!p.is_zero());
        long long lo;
        if (m >= n && k >= n) lo = m + k - n;
        else if (m >= n && n >= k) lo = m;
        else if (k >= n && n >= m) lo = k;
        else lo = n;
        INFO("at (" << m << "," << n << "," << k << ")");
        CHECK(p.min_exponent() == lo);
        CHECK(p.max_exponent() == m + n + k);
        CHECK(p.coeff(m + n + k) == BigInt(1));
    }
}

TEST_CASE("large inputs stay exact") {
    const AlphaTriple xi{400, 400, 400};
    CHECK(closed_qpartition(xi).eval_at_one() == closed_partition_count(xi));
    CHECK(closed_partition_count({1000, 2, 1000}) == BigInt(10));
    CHECK(closed_qpartition({60, 55, 70}) == oracle_triple_sum({60, 55, 70}));
}
