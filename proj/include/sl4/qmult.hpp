#pragma once

#include "sl4/alternation.hpp"
#include "sl4/qpartition.hpp"
#include "sl4/qpoly.hpp"
#include "sl4/weights.hpp"
#include "sl4/weyl.hpp"

#include <array>
#include <vector>

namespace sl4 {

/// The eleven partition-function arguments that can survive the alternating
/// sum for dominant weights: Z_i = partition q-polynomial of the (P,Q,R)
/// triple below, which is sigma(lambda+rho)-rho-mu for the named element.
struct ZEntry {
    int z_index;          // 1..11
    int element_index;    // canonical Weyl element index
    PQRTriple triple;
};

const std::array<ZEntry, 11>& z_table();

/// The alternating sum over all 24 Weyl group elements. No dominance
/// restriction; the partition factor is zero on non-integral or negative
/// shifted weights.
QPoly mq_direct(FWeight lam, FWeight mu);

/// Result of the guarded closed evaluation.
struct MqResult {
    QPoly poly;
    int case_id;            // 1..14 = guarded combination, 15 = zero fallback
    std::string case_name;  // e.g. "Z1 - Z3", "0"
};

/// Closed evaluation: picks the unique matching sign/negation guard over the
/// fourteen P/Q/R values and combines the corresponding Z polynomials.
/// Requires both weights dominant (throws PreconditionError); returns the
/// zero polynomial when lambda - mu is not in the root lattice.
MqResult mq_closed_case(FWeight lam, FWeight mu);
QPoly mq_closed(FWeight lam, FWeight mu);

/// Weight multiplicity: the closed q-polynomial evaluated at q = 1.
BigInt multiplicity(FWeight lam, FWeight mu);

/// The 13 elements whose term vanishes for every pair of dominant weights.
/// Checks the vanishing on the given pair (throws std::logic_error on a
/// counterexample) and returns the elements.
std::vector<const WeylElement*> vanished_elements_check(FWeight lam,
                                                        FWeight mu);

} // namespace sl4
