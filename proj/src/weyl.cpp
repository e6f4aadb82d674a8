#include "sl4/weyl.hpp"

#include <cassert>
#include <cstring>
#include <set>

namespace sl4 {

namespace {

struct RowSpec {
    const char* word;
    PQRTriple pqr;
};

// Canonical table: all 24 reduced words with their (P,Q,R) triples, ordered
// by length then fixed row order. The words are pinned verbatim so that CLI
// output and set serializations are stable.
constexpr RowSpec kRows[kWeylOrder] = {
    {"1",            {PComp::P1, QComp::Q1, RComp::R1}},
    {"s1",           {PComp::P4, QComp::Q1, RComp::R1}},
    {"s2",           {PComp::P1, QComp::Q6, RComp::R1}},
    {"s3",           {PComp::P1, QComp::Q1, RComp::R4}},
    {"s1s2",         {PComp::P3, QComp::Q6, RComp::R1}},
    {"s2s1",         {PComp::P4, QComp::Q4, RComp::R1}},
    {"s2s3",         {PComp::P1, QComp::Q5, RComp::R4}},
    {"s3s1",         {PComp::P4, QComp::Q1, RComp::R4}},
    {"s3s2",         {PComp::P1, QComp::Q6, RComp::R3}},
    {"s1s2s1",       {PComp::P3, QComp::Q4, RComp::R1}},
    {"s1s2s3",       {PComp::P2, QComp::Q5, RComp::R4}},
    {"s2s3s1",       {PComp::P4, QComp::Q3, RComp::R4}},
    {"s2s3s2",       {PComp::P1, QComp::Q5, RComp::R3}},
    {"s3s1s2",       {PComp::P3, QComp::Q6, RComp::R3}},
    {"s3s2s1",       {PComp::P4, QComp::Q4, RComp::R2}},
    {"s1s2s3s1",     {PComp::P2, QComp::Q3, RComp::R4}},
    {"s1s2s3s2",     {PComp::P2, QComp::Q5, RComp::R3}},
    {"s2s3s1s2",     {PComp::P3, QComp::Q2, RComp::R3}},
    {"s2s3s2s1",     {PComp::P4, QComp::Q3, RComp::R2}},
    {"s3s1s2s1",     {PComp::P3, QComp::Q4, RComp::R2}},
    {"s1s2s3s1s2",   {PComp::P2, QComp::Q2, RComp::R3}},
    {"s1s2s3s2s1",   {PComp::P2, QComp::Q3, RComp::R2}},
    {"s2s3s1s2s1",   {PComp::P3, QComp::Q2, RComp::R2}},
    {"s1s2s3s1s2s1", {PComp::P2, QComp::Q2, RComp::R2}},
};

[[maybe_unused]] int inversions(const std::array<std::uint8_t, 4>& p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

std::array<WeylElement, kWeylOrder> build_table() {
    std::array<WeylElement, kWeylOrder> table{};
    std::set<std::array<std::uint8_t, 4>> seen;
    for (int idx = 0; idx < kWeylOrder; ++idx) {
        WeylElement e{};
        e.index = idx;
        e.word = kRows[idx].word;
        e.pqr = kRows[idx].pqr;
        e.len = 0;
        if (std::strcmp(e.word, "1") != 0) {
            for (const char* c = e.word; *c; c += 2) {
                assert(*c == 's');
                e.letters[e.len++] = std::uint8_t(c[1] - '0');
            }
        }
        // Word acts right to left: apply generators from the last letter.
        e.perm = {0, 1, 2, 3};
        for (int i = e.len - 1; i >= 0; --i) {
            int g = e.letters[i] - 1; // s_j swaps j-1 and j (0-based g, g+1)
            std::array<std::uint8_t, 4> next{};
            for (int v = 0; v < 4; ++v) {
                int image = e.perm[v];
                if (image == g) image = g + 1;
                else if (image == g + 1) image = g;
                next[v] = std::uint8_t(image);
            }
            e.perm = next;
        }
        assert(inversions(e.perm) == e.len && "reduced word length mismatch");
        assert(seen.insert(e.perm).second && "duplicate permutation");
        table[idx] = e;
    }
    assert(table[kWeylOrder - 1].len == 6);
    return table;
}

RWeight apply_generator(int g, RWeight w) {
    switch (g) {
    case 1: return {w.q2 - w.q1, w.q2, w.q3};
    case 2: return {w.q1, w.q1 - w.q2 + w.q3, w.q3};
    case 3: return {w.q1, w.q2, w.q2 - w.q3};
    }
    assert(false);
    return w;
}

} // namespace

const std::array<WeylElement, kWeylOrder>& all_elements() {
    static const std::array<WeylElement, kWeylOrder> table = build_table();
    return table;
}

const WeylElement& identity_element() { return all_elements()[0]; }

const WeylElement& element_by_word(const std::string& word) {
    for (const WeylElement& e : all_elements())
        if (word == e.word) return e;
    throw PreconditionError("unknown Weyl group word: " + word);
}

RWeight act_on_rweight(const WeylElement& sigma, RWeight w) {
    for (int i = sigma.len - 1; i >= 0; --i)
        w = apply_generator(sigma.letters[i], w);
    return w;
}

RWeight sigma_shifted(const WeylElement& sigma, FWeight lam, FWeight mu) {
    RWeight v = fweight_to_rweight(lam) + rho();
    return act_on_rweight(sigma, v) - rho() - fweight_to_rweight(mu);
}

PQRValues pqr_values(RootCoords lam_xyz, FWeight mu) {
    const long long x = lam_xyz.x, y = lam_xyz.y, z = lam_xyz.z;
    const long long c1 = mu.m, c2 = mu.n, c3 = mu.k;
    PQRValues v{};
    v.p[(int)PComp::P1] = x;
    v.p[(int)PComp::P2] = -c1 - c2 - c3 - z - 3;
    v.p[(int)PComp::P3] = -c1 - c2 - y + z - 2;
    v.p[(int)PComp::P4] = -c1 - x + y - 1;
    v.q[(int)QComp::Q1] = y;
    v.q[(int)QComp::Q2] = -c1 - 2 * c2 - c3 - y - 4;
    v.q[(int)QComp::Q3] = -c1 - c2 - c3 - x + y - z - 3;
    v.q[(int)QComp::Q4] = -c1 - c2 - x + z - 2;
    v.q[(int)QComp::Q5] = -c2 - c3 + x - z - 2;
    v.q[(int)QComp::Q6] = -c2 + x - y + z - 1;
    v.r[(int)RComp::R1] = z;
    v.r[(int)RComp::R2] = -c1 - c2 - c3 - x - 3;
    v.r[(int)RComp::R3] = -c2 - c3 + x - y - 2;
    v.r[(int)RComp::R4] = -c3 + y - z - 1;
    return v;
}

RootCoords pqr_components(const PQRValues& v, const WeylElement& sigma) {
    return {v[sigma.pqr.p], v[sigma.pqr.q], v[sigma.pqr.r]};
}

const char* pqr_name(PComp c) {
    static const char* names[] = {"P1", "P2", "P3", "P4"};
    return names[(int)c];
}

const char* pqr_name(QComp c) {
    static const char* names[] = {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6"};
    return names[(int)c];
}

const char* pqr_name(RComp c) {
    static const char* names[] = {"R1", "R2", "R3", "R4"};
    return names[(int)c];
}

} // namespace sl4
