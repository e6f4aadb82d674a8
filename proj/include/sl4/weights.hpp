#pragma once

#include "sl4/errors.hpp"

#include <optional>
#include <string>

namespace sl4 {

/// Integral weight in the fundamental-weight basis: m*w1 + n*w2 + k*w3.
struct FWeight {
    long long m = 0, n = 0, k = 0;

    bool dominant() const { return m >= 0 && n >= 0 && k >= 0; }

    friend FWeight operator+(FWeight a, FWeight b) {
        return {a.m + b.m, a.n + b.n, a.k + b.k};
    }
    friend FWeight operator-(FWeight a, FWeight b) {
        return {a.m - b.m, a.n - b.n, a.k - b.k};
    }
    friend bool operator==(const FWeight&, const FWeight&) = default;
};

/// Weight in the simple-root basis, stored exactly as quarters: the
/// coefficient of alpha_i is qi/4. Every integral weight lands on this grid
/// (the fundamental weights have quarter-integral root coordinates), so all
/// arithmetic and comparisons stay in integers.
struct RWeight {
    long long q1 = 0, q2 = 0, q3 = 0; // 4x the alpha-coordinates

    static RWeight from_quarters(long long a, long long b, long long c) {
        return {a, b, c};
    }

    bool integral() const { return q1 % 4 == 0 && q2 % 4 == 0 && q3 % 4 == 0; }
    bool nonnegative() const { return q1 >= 0 && q2 >= 0 && q3 >= 0; }

    friend RWeight operator+(RWeight a, RWeight b) {
        return {a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
    }
    friend RWeight operator-(RWeight a, RWeight b) {
        return {a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3};
    }
    friend bool operator==(const RWeight&, const RWeight&) = default;

    /// "3/2" style rendering of one coordinate, reduced.
    static std::string coord_str(long long quarters);
};

/// Integer point of the root lattice: x*a1 + y*a2 + z*a3.
struct RootCoords {
    long long x = 0, y = 0, z = 0;
    friend bool operator==(const RootCoords&, const RootCoords&) = default;
};

/// Half the sum of the positive roots: w1+w2+w3 = (3/2)a1 + 2a2 + (3/2)a3.
RWeight rho();

/// Change of basis w_i -> alpha_j. Exact; never fails.
RWeight fweight_to_rweight(FWeight w);

/// Inverse change of basis. Throws NonIntegralError when the resulting
/// fundamental-weight coordinates are not integers.
FWeight rweight_to_fweight(RWeight w);

/// Root-lattice point as an FWeight (always integral).
FWeight fweight_of_root_coords(RootCoords c);

/// The integer triple (x,y,z) with w = x*a1 + y*a2 + z*a3, if w lies in the
/// root lattice. The divisibility test runs on the fundamental coordinates
/// directly.
std::optional<RootCoords> integral_root_coords(FWeight w);

std::optional<RootCoords> integral_root_coords(RWeight w);

} // namespace sl4
