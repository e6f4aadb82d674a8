#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl4/alternation.hpp"

#include <set>

using namespace sl4;

TEST_CASE("membership basics") {
    CHECK(is_in_altset(identity_element(), {0, 0, 0}, {0, 0, 0}));
    CHECK(!is_in_altset(element_by_word("s1"), {0, 0, 0}, {0, 0, 0}));
    CHECK(is_in_altset(element_by_word("s2"), {1, 0, 1}, {0, 0, 0}));
    CHECK(altset({0, 0, 0}, {0, 0, 0}).str() == "{1}");
}

TEST_CASE("worked alternation sets") {
    // lambda with root coords (1,2,2), mu = w1+w2+w3 -> {1}
    {
        const FWeight mu{1, 1, 1};
        const FWeight lam = fweight_of_root_coords({1, 2, 2}) + mu;
        CHECK(altset(lam, mu).str() == "{1}");
    }
    // lambda with root coords (1,2,1), mu = w1+w2 -> {1, s3}
    {
        const FWeight mu{1, 1, 0};
        const FWeight lam = fweight_of_root_coords({1, 2, 1}) + mu;
        const AltSet s = altset(lam, mu);
        CHECK(s.str() == "{1,s3}");
        CHECK(s.size() == 2);
    }
}

TEST_CASE("identity membership is nonnegativity of the root coordinates") {
    for (long long x = -4; x <= 4; ++x)
        for (long long y = -4; y <= 4; ++y)
            for (long long z = -4; z <= 4; ++z)
                for (long long c : {0LL, 1LL, 2LL}) {
                    const FWeight mu{c, 0, c};
                    const FWeight lam = fweight_of_root_coords({x, y, z}) + mu;
                    CHECK(is_in_altset(identity_element(), lam, mu) ==
                          (x >= 0 && y >= 0 && z >= 0));
                }
}

TEST_CASE("membership is empty off the shifted root lattice") {
    // lambda - mu = w1 is not in the root lattice: every term vanishes
    CHECK(altset({1, 0, 0}, {0, 0, 0}).empty());
    CHECK(altset({0, 1, 0}, {0, 0, 0}).empty());
}

TEST_CASE("three routes agree on a window") {
    for (long long x = -5; x <= 5; ++x)
        for (long long y = -5; y <= 5; ++y)
            for (long long z = -5; z <= 5; ++z)
                for (long long c1 : {0LL, 1LL})
                    for (long long c3 : {0LL, 2LL}) {
                        const FWeight mu{c1, 0, c3};
                        const RootCoords xyz{x, y, z};
                        const FWeight lam = fweight_of_root_coords(xyz) + mu;
                        const AltSet direct = altset(lam, mu);
                        INFO("at (" << x << "," << y << "," << z << ") c=(" << c1 << ",0," << c3 << ")");
                        CHECK(direct == altset_via_conditions(xyz, mu));
                        CHECK(direct ==
                              altset_via_partition_positivity(lam, mu));
                    }
}

TEST_CASE("condition route handles non-dominant mu (empty regions)") {
    // mu = alpha2 = -w1 + 2w2 - w3
    const FWeight mu{-1, 2, -1};
    for (long long x = -4; x <= 4; ++x)
        for (long long y = -4; y <= 4; ++y)
            for (long long z = -4; z <= 4; ++z) {
                const RootCoords xyz{x, y, z};
                const FWeight lam = fweight_of_root_coords(xyz) + mu;
                INFO("at (" << x << "," << y << "," << z << ")");
                CHECK(altset(lam, mu) == altset_via_conditions(xyz, mu));
            }
}

TEST_CASE("documented deep-negative point") {
    const RootCoords xyz{-10, -10, -10};
    const FWeight lam = fweight_of_root_coords(xyz);
    const AltSet s = altset(lam, {0, 0, 0});
    CHECK(s == altset_via_conditions(xyz, {0, 0, 0}));
    CHECK(s == altset_via_partition_positivity(lam, {0, 0, 0}));
    CHECK(s.size() == 2);
    CHECK(s.contains(element_by_word("s1s2s3s2s1").index));
    CHECK(s.contains(element_by_word("s1s2s3s1s2s1").index));
}

TEST_CASE("octant classification labels") {
    CHECK(classify_mu_zero_octant({0, 0, 0}) == OctantClass::A1);
    CHECK(classify_mu_zero_octant({1, 1, 1}) == OctantClass::A2);
    CHECK(classify_mu_zero_octant({2, 2, 1}) == OctantClass::A3);
    CHECK(octant_class_set(OctantClass::A2).str() == "{1,s2}");
    CHECK(octant_class_set(OctantClass::A3).str() == "{1,s2,s3}");
    CHECK_THROWS_AS((void)classify_mu_zero_octant({-1, 0, 0}),
                    PreconditionError);
    CHECK_THROWS_AS((void)classify_mu_zero_octant({1, 0, 0}),
                    PreconditionError); // 2y-x-z < 0
    // (2,1,1) is not a dominant weight (2y-x-z = -1); outside the domain,
    // though its alternation set is still well defined.
    CHECK_THROWS_AS((void)classify_mu_zero_octant({2, 1, 1}),
                    PreconditionError);
    CHECK(altset(fweight_of_root_coords({2, 1, 1}), {0, 0, 0}).str() ==
          "{1,s2}");
}

TEST_CASE("octant classification agrees with direct membership") {
    std::set<OctantClass> seen;
    for (long long x = 0; x <= 8; ++x)
        for (long long y = 0; y <= 8; ++y)
            for (long long z = 0; z <= 8; ++z) {
                const RootCoords xyz{x, y, z};
                const FWeight lam = fweight_of_root_coords(xyz);
                if (!lam.dominant()) continue;
                const OctantClass cls = classify_mu_zero_octant(xyz);
                INFO("at (" << x << "," << y << "," << z << ")");
                CHECK(octant_class_set(cls) == altset(lam, {0, 0, 0}));
                seen.insert(cls);
            }
    CHECK(seen.size() == 12);
    CHECK(!seen.count(OctantClass::Empty));
}

TEST_CASE("catalog shape") {
    const auto& catalog = altset_catalog();
    CHECK(catalog.size() == 194);
    std::set<std::uint32_t> distinct;
    int max_size = 0;
    int singletons = 0;
    for (const AltSet& s : catalog) {
        CHECK(!s.empty());
        distinct.insert(s.mask);
        max_size = std::max(max_size, s.size());
        if (s.size() == 1) ++singletons;
    }
    CHECK(distinct.size() == 194);
    CHECK(max_size == 6);
    CHECK(singletons == 24);
}

TEST_CASE("enumeration over a single point") {
    LatticeWindow win;
    win.x0 = win.x1 = win.y0 = win.y1 = win.z0 = win.z1 = 0;
    win.mu_set = {{0, 0, 0}};
    const AltSetRegistry reg = enumerate_distinct_altsets(win, 1);
    REQUIRE(reg.sets.size() == 1);
    CHECK(reg.sets[0].str() == "{1}");
    CHECK(reg.counts[0] == 1);
}

TEST_CASE("enumeration is independent of the thread count") {
    LatticeWindow win;
    win.x0 = win.y0 = win.z0 = -6;
    win.x1 = win.y1 = win.z1 = 6;
    win.mu_set = {{0, 0, 0}, {0, 2, 0}, {1, 0, 1}, {2, 0, 2}};
    const AltSetRegistry a = enumerate_distinct_altsets(win, 1);
    const AltSetRegistry b = enumerate_distinct_altsets(win, 4);
    REQUIRE(a.sets.size() == b.sets.size());
    for (size_t i = 0; i < a.sets.size(); ++i) {
        CHECK(a.sets[i] == b.sets[i]);
        CHECK(a.counts[i] == b.counts[i]);
    }
}

TEST_CASE("diagram export layout") {
    LatticeWindow win;
    win.x0 = win.y0 = -2;
    win.x1 = win.y1 = 2;
    win.z0 = win.z1 = 0;
    const Diagram d = diagram_export(win, {0, 0, 0});
    REQUIRE(d.points.size() == 25);
    // serial order: z, then y, then x ascending
    CHECK(d.points.front().xyz == RootCoords{-2, -2, 0});
    CHECK(d.points[1].xyz == RootCoords{-1, -2, 0});
    CHECK(d.points.back().xyz == RootCoords{2, 2, 0});
    for (const DiagramPoint& p : d.points) {
        CHECK(p.set_id >= 0);
        CHECK(p.set_id < (int)d.registry.sets.size());
        CHECK(d.registry.sets[p.set_id] ==
              altset(p.lambda, {0, 0, 0}));
    }
}

TEST_CASE("diagram point (1,1,1) carries the {1,s2} set") {
    LatticeWindow win;
    win.x0 = win.y0 = win.z0 = 0;
    win.x1 = win.y1 = win.z1 = 1;
    const Diagram d = diagram_export(win, {0, 0, 0});
    for (const DiagramPoint& p : d.points)
        if (p.xyz == RootCoords{1, 1, 1})
            CHECK(d.registry.sets[p.set_id].str() == "{1,s2}");
}

TEST_CASE("empty region basics") {
    LatticeWindow win;
    win.x0 = win.y0 = win.z0 = -1;
    win.x1 = win.y1 = win.z1 = 1;
    const auto pts = empty_region(win, {0, 0, 0});
    for (const RootCoords& p : pts) {
        const FWeight lam = fweight_of_root_coords(p);
        CHECK(altset(lam, {0, 0, 0}).empty());
        CHECK(!(p == RootCoords{0, 0, 0}));
    }
    // brute agreement over the 27 points
    long long empties = 0;
    for (long long x = -1; x <= 1; ++x)
        for (long long y = -1; y <= 1; ++y)
            for (long long z = -1; z <= 1; ++z)
                if (altset(fweight_of_root_coords({x, y, z}), {0, 0, 0})
                        .empty())
                    ++empties;
    CHECK((long long)pts.size() == empties);
}

TEST_CASE("empty region grows with the alpha2 coefficient") {
    LatticeWindow win;
    win.x0 = win.y0 = win.z0 = -10;
    win.x1 = win.y1 = win.z1 = 10;
    const FWeight alpha2{-1, 2, -1};
    const FWeight two_alpha2{-2, 4, -2};
    const auto small = empty_region(win, alpha2);
    const auto large = empty_region(win, two_alpha2);
    CHECK(small.size() > 0);
    CHECK(large.size() > small.size());
}

TEST_CASE("set cardinality stays at most six for root-lattice dominant mu") {
    LatticeWindow win;
    win.x0 = win.y0 = win.z0 = -8;
    win.x1 = win.y1 = win.z1 = 8;
    for (const FWeight mu : {FWeight{0, 0, 0}, FWeight{1, 0, 1},
                             FWeight{0, 2, 0}, FWeight{2, 2, 2}}) {
        REQUIRE(integral_root_coords(mu).has_value());
        for (long long x = win.x0; x <= win.x1; ++x)
            for (long long y = win.y0; y <= win.y1; ++y)
                for (long long z = win.z0; z <= win.z1; ++z)
                    CHECK(altset_via_conditions({x, y, z}, mu).size() <= 6);
    }
}
