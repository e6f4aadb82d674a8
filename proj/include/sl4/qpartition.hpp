#pragma once

#include "sl4/qpoly.hpp"
#include "sl4/weights.hpp"

namespace sl4 {

/// Argument of the partition function: xi = m*a1 + n*a2 + k*a3. Negative
/// coordinates are allowed and make every partition count zero.
struct AlphaTriple {
    long long m = 0, n = 0, k = 0;
    friend bool operator==(const AlphaTriple&, const AlphaTriple&) = default;
};

/// Number of parts tracked as the exponent of q: coefficient of q^i counts
/// the ways to write xi as a sum of exactly i positive roots.
///
/// Reference evaluator built on the classical triple sum; runtime grows with
/// the number of vector partitions.
QPoly oracle_triple_sum(AlphaTriple xi);

/// Independent reference evaluator: enumerates the solutions of
///   a+d+f = m,  b+d+e+f = n,  c+e+f = k   over nonnegative integers,
/// one positive-root partition per solution, exponent a+b+c+d+e+f.
QPoly oracle_vector_partitions(AlphaTriple xi);

/// Number of partitions of t from the multiset {1r, 1b, 2} (two colors of 1,
/// one 2), written t = d*1r + e*1b + f*2, subject to d+f <= m, d+e+f <= n,
/// e+f <= k. Equals the coefficient of q^(m+n+k-t) of the partition
/// function. Pass huge bounds for the unrestricted count.
BigInt colored_partitions(long long t, long long m, long long n, long long k);

/// Ordering cases of the closed formulas; several can apply at once on
/// boundaries and all applicable ones agree.
enum class ClosedCase {
    MKgeN = 1, // m,k >= n
    MgeNgeK,   // m >= n >= k
    KgeNgeM,   // k >= n >= m
    NgeMgeK,   // n >= m >= k
    NgeKgeM,   // n >= k >= m
};

bool closed_case_applies(ClosedCase c, AlphaTriple xi);

/// Evaluate one specific ordering branch; precondition: the case applies
/// (throws PreconditionError otherwise).
QPoly closed_qpartition_case(AlphaTriple xi, ClosedCase c);

/// Constant-work-per-coefficient evaluation of the partition q-polynomial.
/// Dispatches to the first applicable ordering case; zero polynomial on any
/// negative coordinate.
QPoly closed_qpartition(AlphaTriple xi);

/// Swap of the outer coordinates; the partition function is invariant.
inline AlphaTriple mirror(AlphaTriple xi) { return {xi.k, xi.n, xi.m}; }

/// Closed form evaluated through the mirror symmetry where the direct
/// branch would not apply. Used by tests against the direct branches.
QPoly closed_qpartition_via_mirror(AlphaTriple xi);

/// Cases of the q=1 count; cases 4/6 and 5/7 overlap where n = m+k.
enum class CountCase {
    MKgeN = 1,
    MgeNgeK,
    KgeNgeM,
    NgeMgeK_Wide,   // n >= m >= k, n >= m+k
    NgeKgeM_Wide,   // n >= k >= m, n >= m+k
    NgeMgeK_Narrow, // n >= m >= k, m+k >= n
    NgeKgeM_Narrow, // n >= k >= m, m+k >= n
};

bool count_case_applies(CountCase c, AlphaTriple xi);
BigInt closed_partition_count_case(AlphaTriple xi, CountCase c);

/// Total number of vector partitions, via the seven-case cubic formulas.
/// Throws NegativeInputError on a negative coordinate.
BigInt closed_partition_count(AlphaTriple xi);

} // namespace sl4
