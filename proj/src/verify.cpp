#include "sl4/verify.hpp"

#include "sl4/parallel.hpp"
#include "sl4/qmult.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <random>
#include <set>
#include <sstream>

namespace sl4::verify {

namespace {

std::string triple_str(AlphaTriple t) {
    std::ostringstream out;
    out << "(" << t.m << "," << t.n << "," << t.k << ")";
    return out.str();
}

std::string pair_str(FWeight lam, FWeight mu) {
    std::ostringstream out;
    out << "lambda=(" << lam.m << "," << lam.n << "," << lam.k << ") mu=("
        << mu.m << "," << mu.n << "," << mu.k << ")";
    return out.str();
}

QPoly poly_of(std::initializer_list<std::pair<long long, long long>> terms) {
    QPoly p;
    for (auto [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
}

CheckResult fail(std::string detail, std::string failure) {
    return {false, std::move(detail), std::move(failure)};
}

} // namespace

CheckResult worked_examples() {
    struct Case {
        FWeight lam, mu;
        QPoly expected;
        long long mult;
        const char* case_name; // nullptr = unchecked
    };
    const Case cases[] = {
        {{1, 0, 1}, {0, 0, 0}, poly_of({{1, 1}, {2, 1}, {3, 1}}), 3, nullptr},
        {{1, 2, 3}, {1, 1, 1}, poly_of({{2, 1}, {3, 3}, {4, 2}, {5, 1}}), 7,
         nullptr},
        {{1, 3, 0}, {1, 1, 0}, poly_of({{2, 1}, {3, 1}, {4, 1}}), 3,
         "Z1 - Z3"},
        {{0, 0, 0}, {0, 0, 0}, poly_of({{0, 1}}), 1, nullptr},
    };
    for (const Case& c : cases) {
        const MqResult r = mq_closed_case(c.lam, c.mu);
        const QPoly direct = mq_direct(c.lam, c.mu);
        if (r.poly != c.expected || direct != c.expected)
            return fail("fixed multiplicity examples",
                        pair_str(c.lam, c.mu) + ": got " + r.poly.str() +
                            " / direct " + direct.str() + ", expected " +
                            c.expected.str());
        if (multiplicity(c.lam, c.mu) != BigInt(c.mult))
            return fail("fixed multiplicity examples",
                        pair_str(c.lam, c.mu) + ": wrong multiplicity");
        if (c.case_name && r.case_name != c.case_name)
            return fail("fixed multiplicity examples",
                        pair_str(c.lam, c.mu) + ": case " + r.case_name +
                            ", expected " + c.case_name);
    }
    return {true, "fixed multiplicity examples all exact", ""};
}

CheckResult oracle_equivalence(long long mx) {
    long long checked = 0;
    for (long long m = 0; m <= mx; ++m)
        for (long long n = 0; n <= mx; ++n)
            for (long long k = 0; k <= mx; ++k) {
                const AlphaTriple xi{m, n, k};
                const QPoly closed = closed_qpartition(xi);
                if (closed != oracle_triple_sum(xi))
                    return fail("closed vs oracles",
                                "triple-sum mismatch at " + triple_str(xi));
                if (closed != oracle_vector_partitions(xi))
                    return fail("closed vs oracles",
                                "vector-partition mismatch at " + triple_str(xi));
                ++checked;
            }
    std::ostringstream d;
    d << "closed = triple-sum = vector-partition on " << checked << " triples";
    return {true, d.str(), ""};
}

CheckResult q1_consistency(long long mx) {
    long long checked = 0;
    for (long long m = 0; m <= mx; ++m)
        for (long long n = 0; n <= mx; ++n)
            for (long long k = 0; k <= mx; ++k) {
                const AlphaTriple xi{m, n, k};
                const BigInt total = closed_qpartition(xi).eval_at_one();
                if (closed_partition_count(xi) != total)
                    return fail("q=1 counts", "dispatch mismatch at " +
                                                  triple_str(xi));
                for (CountCase c :
                     {CountCase::MKgeN, CountCase::MgeNgeK, CountCase::KgeNgeM,
                      CountCase::NgeMgeK_Wide, CountCase::NgeKgeM_Wide,
                      CountCase::NgeMgeK_Narrow, CountCase::NgeKgeM_Narrow})
                    if (count_case_applies(c, xi) &&
                        closed_partition_count_case(xi, c) != total)
                        return fail("q=1 counts",
                                    "case " + std::to_string((int)c) +
                                        " mismatch at " + triple_str(xi));
                ++checked;
            }
    std::ostringstream d;
    d << "cubic count formulas match eval-at-1 on " << checked
      << " triples (all applicable cases)";
    return {true, d.str(), ""};
}

CheckResult colored_bijection(long long mx) {
    const long long big = 1LL << 40;
    if (colored_partitions(4, big, big, big) != BigInt(9))
        return fail("colored partitions",
                    "unrestricted partitions of 4: expected 9");
    for (long long m = 0; m <= mx; ++m)
        for (long long n = 0; n <= mx; ++n)
            for (long long k = 0; k <= mx; ++k) {
                const QPoly p = oracle_vector_partitions({m, n, k});
                for (long long t = 0; t <= m + n + k; ++t)
                    if (colored_partitions(t, m, n, k) != p.coeff(m + n + k - t))
                        return fail("colored partitions",
                                    "count mismatch at " +
                                        triple_str({m, n, k}) +
                                        " t=" + std::to_string(t));
            }
    std::ostringstream d;
    d << "restricted colored counts equal coefficients up to " << mx
      << "^3; nine partitions of 4";
    return {true, d.str(), ""};
}

CheckResult mirror_symmetry(long long mx) {
    for (long long m = 0; m <= mx; ++m)
        for (long long n = 0; n <= mx; ++n)
            for (long long k = 0; k <= mx; ++k) {
                const AlphaTriple xi{m, n, k};
                const QPoly direct = closed_qpartition(xi);
                if (direct != closed_qpartition(mirror(xi)) ||
                    direct != closed_qpartition_via_mirror(xi))
                    return fail("mirror symmetry",
                                "mismatch at " + triple_str(xi));
            }
    std::ostringstream d;
    d << "mirror symmetry exact up to " << mx << "^3";
    return {true, d.str(), ""};
}

CheckResult altset_enumeration(const LatticeWindow& win, int threads) {
    const AltSetRegistry reg = enumerate_distinct_altsets(win, threads);
    std::ostringstream d;
    d << reg.sets.size() << " distinct sets found, expected 195";
    const long long nonempty = reg.nonempty_count();
    if (reg.sets.size() != 195 || nonempty != 194)
        return fail(d.str(), "distinct=" + std::to_string(reg.sets.size()) +
                                 " nonempty=" + std::to_string(nonempty));
    if (reg.max_cardinality() != 6)
        return fail(d.str(), "max cardinality " +
                                 std::to_string(reg.max_cardinality()) +
                                 ", expected 6");
    const std::vector<AltSet>& catalog = altset_catalog();
    for (const AltSet& s : reg.sets) {
        if (s.empty()) continue;
        if (std::find(catalog.begin(), catalog.end(), s) == catalog.end())
            return fail(d.str(), "observed set not in catalog: " + s.str());
    }
    for (const AltSet& s : catalog)
        if (reg.id_of(s) < 0)
            return fail(d.str(), "catalog set never observed: " + s.str());
    d << "; max cardinality 6; catalog matched both ways";
    return {true, d.str(), ""};
}

CheckResult octant_classification(long long mx) {
    std::set<OctantClass> seen;
    long long points = 0;
    for (long long x = 0; x <= mx; ++x)
        for (long long y = 0; y <= mx; ++y)
            for (long long z = 0; z <= mx; ++z) {
                const RootCoords xyz{x, y, z};
                const FWeight lam = fweight_of_root_coords(xyz);
                if (!lam.dominant()) continue;
                ++points;
                const OctantClass cls = classify_mu_zero_octant(xyz);
                if (octant_class_set(cls) != altset(lam, {0, 0, 0})) {
                    std::ostringstream w;
                    w << "class/brute-force mismatch at (" << x << "," << y
                      << "," << z << ")";
                    return fail("octant classification", w.str());
                }
                seen.insert(cls);
            }
    const size_t nonempty = seen.count(OctantClass::Empty)
                                ? seen.size() - 1
                                : seen.size();
    std::ostringstream d;
    d << nonempty << " nonempty classes over " << points
      << " octant points, expected 12";
    if (nonempty != 12) return fail(d.str(), "wrong class count");
    return {true, d.str(), ""};
}

CheckResult mult_agreement(long long mx, int threads) {
    const long long side = mx + 1;
    const long long lam_total = side * side * side;
    struct ChunkOut {
        bool ok = true;
        std::string failure;
        long long pairs = 0;
    };
    std::vector<ChunkOut> outs;
    int chunks = 0;
    {
        std::vector<ChunkOut> tmp(std::max(resolve_threads(threads), 1));
        chunks = parallel_chunks(lam_total, threads, [&](int ci, long long b,
                                                         long long e) {
            ChunkOut& out = tmp[ci];
            for (long long li = b; li < e && out.ok; ++li) {
                const FWeight lam{li / (side * side), li / side % side,
                                  li % side};
                for (long long c1 = 0; c1 <= mx && out.ok; ++c1)
                    for (long long c2 = 0; c2 <= mx && out.ok; ++c2)
                        for (long long c3 = 0; c3 <= mx && out.ok; ++c3) {
                            const FWeight mu{c1, c2, c3};
                            const MqResult closed = mq_closed_case(lam, mu);
                            const QPoly direct = mq_direct(lam, mu);
                            ++out.pairs;
                            if (closed.poly != direct) {
                                out.ok = false;
                                out.failure =
                                    pair_str(lam, mu) + ": closed [" +
                                    closed.case_name + "] " +
                                    closed.poly.str() + " != direct " +
                                    direct.str();
                            } else if (!closed.poly.coeffs_nonnegative()) {
                                out.ok = false;
                                out.failure = pair_str(lam, mu) +
                                              ": negative coefficient";
                            }
                        }
            }
        });
        outs.assign(tmp.begin(), tmp.begin() + chunks);
    }
    long long pairs = 0;
    for (const ChunkOut& o : outs) {
        if (!o.ok) return fail("closed vs direct multiplicity", o.failure);
        pairs += o.pairs;
    }
    std::ostringstream d;
    d << "closed = direct (nonnegative) on " << pairs << " dominant pairs";
    return {true, d.str(), ""};
}

CheckResult vanishing_random(int samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> coord(0, 12);
    for (int s = 0; s < samples; ++s) {
        const FWeight lam{coord(rng), coord(rng), coord(rng)};
        const FWeight mu{coord(rng), coord(rng), coord(rng)};
        try {
            const auto vanished = vanished_elements_check(lam, mu);
            if (vanished.size() != 13)
                return fail("vanishing set", pair_str(lam, mu) +
                                                 ": wrong vanished count");
            bool has_w0 = false, has_sl = false;
            for (const WeylElement* e : vanished) {
                if (std::strcmp(e->word, "s1s2s3s1s2s1") == 0) has_w0 = true;
                if (std::strcmp(e->word, "s3s1s2") == 0) has_sl = true;
            }
            if (!has_w0 || !has_sl)
                return fail("vanishing set",
                            pair_str(lam, mu) + ": expected element missing");
        } catch (const std::logic_error& err) {
            return fail("vanishing set", pair_str(lam, mu) + ": " + err.what());
        }
    }
    std::ostringstream d;
    d << "13 elements vanish on " << samples << " random dominant pairs";
    return {true, d.str(), ""};
}

CheckResult two_route_agreement(long long hw, long long oracle_hw,
                                long long cmax) {
    for (long long c1 = 0; c1 <= cmax; ++c1)
        for (long long c2 = 0; c2 <= cmax; ++c2)
            for (long long c3 = 0; c3 <= cmax; ++c3) {
                const FWeight mu{c1, c2, c3};
                for (long long x = -hw; x <= hw; ++x)
                    for (long long y = -hw; y <= hw; ++y)
                        for (long long z = -hw; z <= hw; ++z) {
                            const RootCoords xyz{x, y, z};
                            const FWeight lam =
                                fweight_of_root_coords(xyz) + mu;
                            const AltSet direct = altset(lam, mu);
                            if (direct != altset_via_conditions(xyz, mu)) {
                                std::ostringstream w;
                                w << "condition route mismatch at ("
                                  << x << "," << y << "," << z << ") "
                                  << pair_str(lam, mu);
                                return fail("membership routes", w.str());
                            }
                            const bool in_oracle_box =
                                std::max({std::abs(x), std::abs(y),
                                          std::abs(z)}) <= oracle_hw;
                            if (in_oracle_box &&
                                direct !=
                                    altset_via_partition_positivity(lam, mu)) {
                                std::ostringstream w;
                                w << "oracle positivity mismatch at ("
                                  << x << "," << y << "," << z << ") "
                                  << pair_str(lam, mu);
                                return fail("membership routes", w.str());
                            }
                        }
            }
    std::ostringstream d;
    d << "membership routes agree on [-" << hw << "," << hw
      << "]^3 (oracle route on [-" << oracle_hw << "," << oracle_hw << "]^3)";
    return {true, d.str(), ""};
}

CheckResult support_bounds(long long mx) {
    for (long long m = 0; m <= mx; ++m)
        for (long long n = 0; n <= mx; ++n)
            for (long long k = 0; k <= mx; ++k) {
                const AlphaTriple xi{m, n, k};
                long long lo = 0;
                if (m >= n && k >= n) lo = m + k - n;
                else if (m >= n && n >= k) lo = m;
                else if (k >= n && n >= m) lo = k;
                else lo = n;
                const QPoly p = closed_qpartition(xi);
                if (p.is_zero() || p.min_exponent() != lo ||
                    p.max_exponent() != m + n + k ||
                    !(p.coeff(lo) > BigInt(0)) ||
                    p.coeff(m + n + k) != BigInt(1) || !p.coeffs_nonnegative())
                    return fail("support bounds",
                                "exponent range wrong at " + triple_str(xi));
            }
    std::ostringstream d;
    d << "exponent supports match the stated ranges up to " << mx << "^3";
    return {true, d.str(), ""};
}

CheckResult dimension_consistency(long long mx) {
    for (long long m = 0; m <= mx; ++m)
        for (long long n = 0; n <= mx; ++n)
            for (long long k = 0; k <= mx; ++k) {
                const FWeight lam{m, n, k};
                const BigInt a1(m + 1), a2(n + 1), a3(k + 1);
                BigInt dim = a1 * a2 * a3 * (a1 + a2) * (a2 + a3) *
                             (a1 + a2 + a3);
                dim.div_exact(12);

                BigInt total;
                const long long bound = m + n + k;
                for (long long x = 0; x <= bound; ++x)
                    for (long long y = 0; y <= bound; ++y)
                        for (long long z = 0; z <= bound; ++z) {
                            const FWeight mu =
                                lam - fweight_of_root_coords({x, y, z});
                            if (!mu.dominant()) continue;
                            // Orbit size 24 / |stabilizer|; the stabilizer is
                            // generated by the reflections fixing mu.
                            int stab = 1;
                            if (mu.m == 0 && mu.n == 0 && mu.k == 0) stab = 24;
                            else if (mu.m == 0 && mu.n == 0) stab = 6;
                            else if (mu.n == 0 && mu.k == 0) stab = 6;
                            else if (mu.m == 0 && mu.k == 0) stab = 4;
                            else if (mu.m == 0 || mu.n == 0 || mu.k == 0)
                                stab = 2;
                            BigInt contrib = multiplicity(lam, mu);
                            contrib *= BigInt(24 / stab);
                            total += contrib;
                        }
                if (total != dim)
                    return fail("dimension consistency",
                                "lambda=(" + std::to_string(m) + "," +
                                    std::to_string(n) + "," +
                                    std::to_string(k) + "): orbit sum " +
                                    total.str() + " != " + dim.str());
            }
    std::ostringstream d;
    d << "orbit-weighted multiplicities sum to the dimension formula up to "
      << mx << "^3";
    return {true, d.str(), ""};
}

CheckResult group_sanity(int table2_samples, unsigned seed) {
    const auto& elems = all_elements();
    if (elems.size() != 24) return fail("group sanity", "element count");

    static const char* kExpectedWords[] = {
        "1", "s1", "s2", "s3", "s1s2", "s2s1", "s2s3", "s3s1", "s3s2",
        "s1s2s1", "s1s2s3", "s2s3s1", "s2s3s2", "s3s1s2", "s3s2s1",
        "s1s2s3s1", "s1s2s3s2", "s2s3s1s2", "s2s3s2s1", "s3s1s2s1",
        "s1s2s3s1s2", "s1s2s3s2s1", "s2s3s1s2s1", "s1s2s3s1s2s1"};
    for (int i = 0; i < kWeylOrder; ++i)
        if (std::strcmp(elems[i].word, kExpectedWords[i]) != 0)
            return fail("group sanity", "word table mismatch at index " +
                                            std::to_string(i));

    int by_len[7] = {0};
    for (const WeylElement& e : elems) ++by_len[e.len];
    const int expected_len[7] = {1, 3, 5, 6, 5, 3, 1};
    for (int l = 0; l <= 6; ++l)
        if (by_len[l] != expected_len[l])
            return fail("group sanity", "length distribution");

    // Find the element equal to a composed permutation.
    auto find_by_perm = [&](const std::array<std::uint8_t, 4>& p) -> const WeylElement* {
        for (const WeylElement& e : elems)
            if (e.perm == p) return &e;
        return nullptr;
    };
    auto compose = [](const std::array<std::uint8_t, 4>& f,
                      const std::array<std::uint8_t, 4>& g) {
        std::array<std::uint8_t, 4> r{};
        for (int i = 0; i < 4; ++i) r[i] = f[g[i]];
        return r;
    };

    // Sign homomorphism over all pairs.
    for (const WeylElement& a : elems)
        for (const WeylElement& b : elems) {
            const WeylElement* ab = find_by_perm(compose(a.perm, b.perm));
            if (!ab || ab->sign() != a.sign() * b.sign())
                return fail("group sanity", "sign homomorphism");
        }

    // Generator relations, on permutations and on the root action.
    const WeylElement& s1 = element_by_word("s1");
    const WeylElement& s2 = element_by_word("s2");
    const WeylElement& s3 = element_by_word("s3");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> q(-40, 40);
    for (int trial = 0; trial < 50; ++trial) {
        const RWeight w{q(rng), q(rng), q(rng)};
        auto act = [&](const WeylElement& e, RWeight v) {
            return act_on_rweight(e, v);
        };
        for (const WeylElement* s : {&s1, &s2, &s3})
            if (act(*s, act(*s, w)) != w)
                return fail("group sanity", "involution relation");
        if (act(s1, act(s2, act(s1, w))) != act(s2, act(s1, act(s2, w))))
            return fail("group sanity", "braid relation s1s2s1");
        if (act(s2, act(s3, act(s2, w))) != act(s3, act(s2, act(s3, w))))
            return fail("group sanity", "braid relation s2s3s2");
        if (act(s1, act(s3, w)) != act(s3, act(s1, w)))
            return fail("group sanity", "commutation s1s3");
    }

    // The action permutes the twelve roots.
    const RWeight roots[6] = {{4, 0, 0}, {0, 4, 0}, {0, 0, 4},
                              {4, 4, 0}, {0, 4, 4}, {4, 4, 4}};
    for (const WeylElement& e : elems) {
        std::set<std::array<long long, 3>> image;
        for (const RWeight& r : roots)
            for (int sgn : {1, -1}) {
                const RWeight v =
                    act_on_rweight(e, {sgn * r.q1, sgn * r.q2, sgn * r.q3});
                image.insert({v.q1, v.q2, v.q3});
            }
        std::set<std::array<long long, 3>> expected;
        for (const RWeight& r : roots)
            for (int sgn : {1, -1})
                expected.insert({sgn * r.q1, sgn * r.q2, sgn * r.q3});
        if (image != expected)
            return fail("group sanity", std::string("root permutation: ") +
                                            e.word);
    }

    // Symbolic coefficient table vs the concrete reflection action.
    std::uniform_int_distribution<long long> xyz(-10, 10);
    std::uniform_int_distribution<long long> cc(0, 5);
    for (int s = 0; s < table2_samples; ++s) {
        const RootCoords p{xyz(rng), xyz(rng), xyz(rng)};
        const FWeight mu{cc(rng), cc(rng), cc(rng)};
        const FWeight lam = fweight_of_root_coords(p) + mu;
        const PQRValues v = pqr_values(p, mu);
        for (const WeylElement& e : elems) {
            const RootCoords c = pqr_components(v, e);
            const RWeight expect{4 * c.x, 4 * c.y, 4 * c.z};
            if (sigma_shifted(e, lam, mu) != expect)
                return fail("group sanity",
                            std::string("coefficient table mismatch for ") +
                                e.word + " at " + pair_str(lam, mu));
        }
    }
    std::ostringstream d;
    d << "group table, relations, signs, root action, coefficient table ("
      << table2_samples << " samples)";
    return {true, d.str(), ""};
}

BenchStats bench_partition(long long lo, long long hi) {
    BenchStats st;
    st.outputs_agree = true;
    std::vector<AlphaTriple> inputs;
    for (long long m = lo; m < hi; ++m)
        for (long long n = lo; n < hi; ++n)
            for (long long k = lo; k < hi; ++k) inputs.push_back({m, n, k});
    st.evaluations = (long long)inputs.size();
    if (inputs.empty()) return st;

    for (const AlphaTriple& xi : inputs)
        if (closed_qpartition(xi) != oracle_triple_sum(xi)) {
            st.outputs_agree = false;
            return st;
        }

    using clock = std::chrono::steady_clock;
    volatile std::size_t sink = 0;

    const auto t0 = clock::now();
    for (const AlphaTriple& xi : inputs)
        sink = sink + closed_qpartition(xi).terms().size();
    const auto t1 = clock::now();
    for (const AlphaTriple& xi : inputs)
        sink = sink + oracle_triple_sum(xi).terms().size();
    const auto t2 = clock::now();

    const double closed_ns =
        (double)std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
            .count();
    const double sum_ns =
        (double)std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1)
            .count();
    st.closed_ns_per_eval = closed_ns / (double)inputs.size();
    st.sum_ns_per_eval = sum_ns / (double)inputs.size();
    st.speedup = st.closed_ns_per_eval > 0
                     ? st.sum_ns_per_eval / st.closed_ns_per_eval
                     : 0;
    return st;
}

CheckResult performance(long long lo, long long hi, double min_ratio) {
    const BenchStats st = bench_partition(lo, hi);
    std::ostringstream d;
    d.precision(1);
    d << std::fixed << "closed " << st.closed_ns_per_eval / 1000.0
      << "us vs triple-sum " << st.sum_ns_per_eval / 1000.0 << "us per eval ("
      << st.evaluations << " evals, speedup " << st.speedup << "x)";
    if (!st.outputs_agree)
        return fail(d.str(), "engines disagree on the benchmark range");
    if (st.speedup < min_ratio)
        return fail(d.str(), "speedup below required ratio");
    return {true, d.str(), ""};
}

} // namespace sl4::verify
