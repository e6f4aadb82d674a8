#include "sl4/qmult.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sl4 {

const std::array<ZEntry, 11>& z_table() {
    static const std::array<ZEntry, 11> table = [] {
        // (z index, canonical word). The (P,Q,R) triple is the element's own.
        constexpr std::pair<int, const char*> rows[11] = {
            {1, "1"},      {2, "s1s2s1"}, {3, "s3"},     {4, "s1s2"},
            {5, "s2s3"},   {6, "s1"},     {7, "s2s3s2"}, {8, "s2s1"},
            {9, "s3s1"},   {10, "s3s2"},  {11, "s2"},
        };
        std::array<ZEntry, 11> t{};
        for (int i = 0; i < 11; ++i) {
            const WeylElement& e = element_by_word(rows[i].second);
            t[i] = ZEntry{rows[i].first, e.index, e.pqr};
        }
        return t;
    }();
    return table;
}

QPoly mq_direct(FWeight lam, FWeight mu) {
    QPoly sum;
    for (const WeylElement& e : all_elements()) {
        const RWeight shifted = sigma_shifted(e, lam, mu);
        if (!shifted.integral()) continue;
        QPoly part = closed_qpartition(
            {shifted.q1 / 4, shifted.q2 / 4, shifted.q3 / 4});
        if (e.sign() > 0)
            sum += part;
        else
            sum -= part;
    }
    return sum;
}

namespace {

// One guarded row of the closed formula: the Z combination that applies
// when all of `nat` are >= 0, all of `neg` are < 0, and for every pair in
// `either_neg` at least one side is < 0.
struct MqCase {
    int id;
    std::vector<std::pair<int, int>> combo; // (z index, +1/-1)
    std::vector<int> nat;                   // component codes, see below
    std::vector<int> neg;
    std::vector<std::pair<int, int>> either_neg;
};

// Component codes 0..13: P1..P4, Q1..Q6, R1..R4.
enum : int { cP1, cP2, cP3, cP4, cQ1, cQ2, cQ3, cQ4, cQ5, cQ6,
             cR1, cR2, cR3, cR4 };

long long component(const PQRValues& v, int code) {
    if (code <= cP4) return v.p[code];
    if (code <= cQ6) return v.q[code - cQ1];
    return v.r[code - cR1];
}

const std::vector<MqCase>& mq_cases() {
    static const std::vector<MqCase> cases = {
        {1, {{1, 1}, {11, -1}, {3, -1}, {5, 1}, {10, 1}, {7, -1}},
         {cP1, cQ1, cR1, cQ6, cR4, cQ5, cR3}, {cP4, cP3}, {}},
        // The surviving set under this guard is {1,s1,s2,s1s2,s2s1,s1s2s1},
        // so the alternating sum needs -Z11 (element s2); R4 < 0 already
        // forces Z3 = 0 here.
        {2, {{1, 1}, {6, -1}, {11, -1}, {4, 1}, {8, 1}, {2, -1}},
         {cP1, cQ1, cR1, cP4, cQ6, cP3, cQ4}, {cR4, cR3}, {}},
        {3, {{1, 1}, {6, -1}, {11, -1}, {3, -1}, {8, 1}, {9, 1}},
         {cP1, cQ1, cR1, cP4, cR4, cQ6, cQ4}, {cP3, cQ5, cR3}, {}},
        {4, {{1, 1}, {6, -1}, {11, -1}, {3, -1}, {9, 1}, {5, 1}},
         {cP1, cQ1, cR1, cP4, cQ6, cR4, cQ5}, {cP3, cQ4, cR3}, {}},
        {5, {{1, 1}, {6, -1}, {11, -1}, {3, -1}, {9, 1}},
         {cP1, cQ1, cR1, cP4, cQ6, cR4}, {cP3, cQ4, cQ5, cR3}, {}},
        {6, {{1, 1}, {11, -1}, {3, -1}, {5, 1}},
         {cP1, cQ1, cR1, cQ6, cR4, cQ5}, {cP4, cP3, cR3}, {}},
        {7, {{1, 1}, {6, -1}, {3, -1}, {9, 1}},
         {cP1, cQ1, cR1, cP4, cR4}, {cQ6, cQ4, cQ5}, {}},
        {8, {{1, 1}, {6, -1}, {11, -1}, {8, 1}},
         {cP1, cQ1, cR1, cP4, cQ6, cQ4}, {cR4, cP3, cR3}, {}},
        {9, {{1, 1}, {11, -1}, {3, -1}},
         {cP1, cQ1, cR1, cQ6, cR4}, {cP4, cP3, cQ5, cR3}, {}},
        {10, {{1, 1}, {6, -1}, {11, -1}},
         {cP1, cQ1, cR1, cP4, cQ6}, {cR4, cP3, cQ4, cR3}, {}},
        {11, {{1, 1}, {3, -1}},
         {cP1, cQ1, cR1, cR4}, {cQ6, cP4, cQ5}, {{cP3, cQ4}}},
        {12, {{1, 1}, {11, -1}},
         {cP1, cQ1, cR1, cQ6}, {cP4, cR4, cR3, cP3}, {}},
        {13, {{1, 1}, {6, -1}},
         {cP1, cQ1, cR1, cP4}, {cQ6, cR4, cQ4}, {{cQ5, cR3}}},
        {14, {{1, 1}},
         {cP1, cQ1, cR1}, {cR4, cP4, cQ6}, {{cP3, cQ4}, {cQ5, cR3}}},
    };
    return cases;
}

bool guard_matches(const MqCase& mc, const PQRValues& v) {
    for (int code : mc.nat)
        if (component(v, code) < 0) return false;
    for (int code : mc.neg)
        if (component(v, code) >= 0) return false;
    for (auto [a, b] : mc.either_neg)
        if (component(v, a) >= 0 && component(v, b) >= 0) return false;
    return true;
}

std::string combo_name(const MqCase& mc) {
    std::ostringstream out;
    bool first = true;
    for (auto [z, sign] : mc.combo) {
        if (first) {
            if (sign < 0) out << "-";
            first = false;
        } else {
            out << (sign > 0 ? " + " : " - ");
        }
        out << "Z" << z;
    }
    return out.str();
}

QPoly z_poly(int z_index, const PQRValues& v) {
    const ZEntry& entry = z_table()[z_index - 1];
    const RootCoords c{v[entry.triple.p], v[entry.triple.q], v[entry.triple.r]};
    return closed_qpartition({c.x, c.y, c.z});
}

} // namespace

MqResult mq_closed_case(FWeight lam, FWeight mu) {
    if (!lam.dominant() || !mu.dominant())
        throw PreconditionError("mq_closed: both weights must be dominant");
    const auto xyz = integral_root_coords(lam - mu);
    if (!xyz) return {QPoly{}, 15, "0"};
    const PQRValues v = pqr_values(*xyz, mu);
    for (const MqCase& mc : mq_cases()) {
        if (!guard_matches(mc, v)) continue;
        QPoly sum;
        for (auto [z, sign] : mc.combo) {
            QPoly part = z_poly(z, v);
            if (sign > 0)
                sum += part;
            else
                sum -= part;
        }
        return {std::move(sum), mc.id, combo_name(mc)};
    }
    return {QPoly{}, 15, "0"};
}

QPoly mq_closed(FWeight lam, FWeight mu) {
    return mq_closed_case(lam, mu).poly;
}

BigInt multiplicity(FWeight lam, FWeight mu) {
    return mq_closed(lam, mu).eval_at_one();
}

std::vector<const WeylElement*> vanished_elements_check(FWeight lam,
                                                        FWeight mu) {
    if (!lam.dominant() || !mu.dominant())
        throw PreconditionError(
            "vanished_elements_check: both weights must be dominant");
    // The eleven elements of the Z table survive; everything else vanishes
    // identically on dominant pairs.
    std::array<bool, kWeylOrder> survives{};
    for (const ZEntry& entry : z_table()) survives[entry.element_index] = true;
    std::vector<const WeylElement*> vanished;
    for (const WeylElement& e : all_elements()) {
        if (survives[e.index]) continue;
        const RWeight shifted = sigma_shifted(e, lam, mu);
        if (shifted.integral()) {
            const QPoly part = closed_qpartition(
                {shifted.q1 / 4, shifted.q2 / 4, shifted.q3 / 4});
            if (!part.is_zero())
                throw std::logic_error(
                    std::string("vanishing violated for ") + e.word);
        }
        vanished.push_back(&e);
    }
    assert(vanished.size() == 13);
    return vanished;
}

} // namespace sl4
