#pragma once

#include "sl4/alternation.hpp"

#include <string>

namespace sl4::verify {

struct CheckResult {
    bool ok = true;
    std::string detail;  // one-line summary, also shown on success
    std::string failure; // first counterexample when !ok
};

/// Fixed regression values: the three worked multiplicity examples.
CheckResult worked_examples();

/// closed == triple-sum == vector-partition enumeration, exact polynomial
/// equality, for all 0 <= m,n,k <= max_coord.
CheckResult oracle_equivalence(long long max_coord);

/// eval-at-1 of the closed polynomial equals every applicable branch of the
/// seven-case cubic count on the same range.
CheckResult q1_consistency(long long max_coord);

/// Colored-partition counts match the polynomial coefficients for all
/// 0 <= m,n,k <= max_coord and all t; plus the fixed unrestricted count of
/// partitions of 4 (nine).
CheckResult colored_bijection(long long max_coord);

/// Partition polynomial invariant under (m,n,k) -> (k,n,m); the mirrored
/// evaluation route agrees with the direct one.
CheckResult mirror_symmetry(long long max_coord);

/// Exhaustive window scan: 195 distinct alternation sets (194 nonempty plus
/// the empty set), max cardinality 6, and exact agreement with the pinned
/// catalog in both directions.
CheckResult altset_enumeration(const LatticeWindow& win, int threads);

/// mu=0 dominant-octant classification agrees with the directly computed
/// alternation set at every point; exactly 12 nonempty classes occur.
CheckResult octant_classification(long long max_coord);

/// Closed guarded evaluation equals the 24-term alternating sum for every
/// dominant pair with coordinates <= max_coord; coefficients nonnegative.
CheckResult mult_agreement(long long max_coord, int threads);

/// The 13 always-vanishing elements contribute zero on random dominant
/// pairs.
CheckResult vanishing_random(int samples, unsigned seed);

/// Membership routes agree: direct coordinate test vs symbolic conditions
/// on [-hw,hw]^3, and vs partition-oracle positivity on [-oracle_hw,
/// oracle_hw]^3, for all dominant mu with coordinates <= cmax.
CheckResult two_route_agreement(long long hw, long long oracle_hw,
                                long long cmax);

/// Lowest/highest exponents of the closed polynomial match the stated
/// summation ranges; extreme coefficients are 1.
CheckResult support_bounds(long long max_coord);

/// Sum over dominant mu of multiplicity * orbit size equals the Weyl
/// dimension formula for all highest weights with coordinates <= max_coord.
CheckResult dimension_consistency(long long max_coord);

/// Group table sanity plus the symbolic coefficient-table consistency on
/// random parameter samples.
CheckResult group_sanity(int table2_samples, unsigned seed);

struct BenchStats {
    double closed_ns_per_eval = 0;
    double sum_ns_per_eval = 0;
    double speedup = 0;
    bool outputs_agree = false;
    long long evaluations = 0;
};

/// Time the closed form against the triple-sum oracle over the cube
/// [lo, hi) ^3, after asserting output equality on the full range.
BenchStats bench_partition(long long lo, long long hi);

/// Speedup must reach min_ratio on the given range.
CheckResult performance(long long lo, long long hi, double min_ratio);

} // namespace sl4::verify
