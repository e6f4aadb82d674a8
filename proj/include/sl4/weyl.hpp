#pragma once

#include "sl4/weights.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace sl4 {

/// Symbolic coordinates of sigma(lambda+rho)-rho-mu in the root basis.
/// Each Weyl element owns one (P,Q,R) triple; the fourteen component values
/// are linear in (x,y,z) and the mu coordinates (c1,c2,c3).
enum class PComp : std::uint8_t { P1, P2, P3, P4 };
enum class QComp : std::uint8_t { Q1, Q2, Q3, Q4, Q5, Q6 };
enum class RComp : std::uint8_t { R1, R2, R3, R4 };

struct PQRTriple {
    PComp p;
    QComp q;
    RComp r;
};

/// The fourteen component values for a concrete (x,y,z) and mu.
struct PQRValues {
    std::array<long long, 4> p;
    std::array<long long, 6> q;
    std::array<long long, 4> r;

    long long operator[](PComp c) const { return p[(int)c]; }
    long long operator[](QComp c) const { return q[(int)c]; }
    long long operator[](RComp c) const { return r[(int)c]; }
};

/// One of the 24 elements of the Weyl group of sl4 (isomorphic to S4).
///
/// `word` is the canonical reduced word in the generators s1,s2,s3 ("1" for
/// the identity); `perm` is the element as a permutation of {1,2,3,4},
/// stored 0-based. Elements are indexed 0..23 in canonical order: by length,
/// then by the fixed table order used everywhere in this project.
struct WeylElement {
    int index;
    const char* word;
    std::array<std::uint8_t, 6> letters; // 1..3, first `len` entries used
    int len;
    std::array<std::uint8_t, 4> perm;    // images of 0..3
    PQRTriple pqr;

    int sign() const { return len % 2 ? -1 : 1; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.index == b.index;
    }
};

inline constexpr int kWeylOrder = 24;

/// All 24 elements in canonical order. The table is built once and
/// self-checked (word length = inversion count, all permutations distinct).
const std::array<WeylElement, kWeylOrder>& all_elements();

const WeylElement& identity_element();

/// Element lookup by canonical word ("1", "s2s3s1", ...); throws
/// PreconditionError for an unknown word.
const WeylElement& element_by_word(const std::string& word);

/// Reflection action on root-basis coordinates. The word acts right to
/// left: the last letter is applied first.
RWeight act_on_rweight(const WeylElement& sigma, RWeight w);

/// sigma(lambda+rho) - rho - mu, exactly, in root-basis quarters.
RWeight sigma_shifted(const WeylElement& sigma, FWeight lam, FWeight mu);

/// The fourteen P/Q/R values for lambda - mu = x*a1+y*a2+z*a3 and
/// mu = c1*w1+c2*w2+c3*w3.
PQRValues pqr_values(RootCoords lam_xyz, FWeight mu);

/// The three symbolic components of sigma(lambda+rho)-rho-mu, read off the
/// element's (P,Q,R) triple.
RootCoords pqr_components(const PQRValues& v, const WeylElement& sigma);

const char* pqr_name(PComp c);
const char* pqr_name(QComp c);
const char* pqr_name(RComp c);

} // namespace sl4
