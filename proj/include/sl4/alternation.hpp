#pragma once

#include "sl4/qpartition.hpp"
#include "sl4/qpoly.hpp"
#include "sl4/weights.hpp"
#include "sl4/weyl.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sl4 {

/// Subset of the 24 Weyl group elements, as a bitmask over the canonical
/// element indices. Serialization lists members in canonical order
/// (length, then table row), comma separated, identity as "1".
struct AltSet {
    std::uint32_t mask = 0;

    bool contains(int index) const { return mask >> index & 1u; }
    void insert(int index) { mask |= 1u << index; }
    int size() const { return __builtin_popcount(mask); }
    bool empty() const { return mask == 0; }

    std::string str() const;

    friend bool operator==(const AltSet&, const AltSet&) = default;
};

/// True iff sigma(lambda+rho)-rho-mu has integral, nonnegative root
/// coordinates; equivalently, iff its partition count is positive.
bool is_in_altset(const WeylElement& sigma, FWeight lam, FWeight mu);

/// The alternation set of (lambda, mu), by the coordinate test above.
AltSet altset(FWeight lam, FWeight mu);

/// Same set through the symbolic (P,Q,R) component table, for lambda - mu
/// in the root lattice with coordinates xyz.
AltSet altset_via_conditions(RootCoords xyz, FWeight mu);

/// Same set by evaluating an actual partition-counting oracle on each
/// shifted weight and testing positivity. `partition_fn` defaults to the
/// triple-sum oracle; tests may pass any evaluator.
AltSet altset_via_partition_positivity(
    FWeight lam, FWeight mu,
    const std::function<QPoly(AlphaTriple)>& partition_fn);
AltSet altset_via_partition_positivity(FWeight lam, FWeight mu);

/// Labels of the twelve nonempty mu=0 classes over the dominant octant of
/// the root lattice, plus the empty class.
enum class OctantClass {
    A1 = 1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12,
    Empty = 0,
};

const char* octant_class_name(OctantClass c);
AltSet octant_class_set(OctantClass c); // Empty -> {}

/// Classify a dominant-octant root-lattice point by its mu=0 alternation
/// set. Precondition: x,y,z >= 0 and the point is a dominant weight
/// (2x-y, 2y-x-z, 2z-y >= 0); throws PreconditionError otherwise.
OctantClass classify_mu_zero_octant(RootCoords xyz);

/// Enumeration window: lambda - mu ranges over the root-lattice box, for
/// each mu in mu_set (entered in fundamental-weight coordinates).
struct LatticeWindow {
    long long x0 = 0, x1 = 0; // inclusive
    long long y0 = 0, y1 = 0;
    long long z0 = 0, z1 = 0;
    std::vector<FWeight> mu_set;

    bool valid() const { return x0 <= x1 && y0 <= y1 && z0 <= z1; }
    long long point_count() const {
        return (x1 - x0 + 1) * (y1 - y0 + 1) * (z1 - z0 + 1);
    }
};

/// The window and mu family used to certify the full classification:
/// x,y,z in [-20,20], all dominant mu with w-coordinates in {0..4}^3 that
/// lie in the root lattice.
LatticeWindow default_verification_window();

/// Distinct alternation sets with occurrence counts, ids assigned by first
/// occurrence in serial scan order (mu_set order, then z, y, x ascending).
struct AltSetRegistry {
    std::vector<AltSet> sets;
    std::vector<std::uint64_t> counts;

    int id_of(AltSet s) const; // -1 if absent
    int max_cardinality() const;
    long long nonempty_count() const;
};

AltSetRegistry enumerate_distinct_altsets(const LatticeWindow& win,
                                          int threads = 0);

/// One labelled lattice point of an alternation diagram.
struct DiagramPoint {
    RootCoords xyz;
    FWeight lambda;
    int set_id;
};

struct Diagram {
    FWeight mu;
    AltSetRegistry registry;
    std::vector<DiagramPoint> points; // z, then y, then x ascending
};

Diagram diagram_export(const LatticeWindow& win, FWeight mu);

/// Points of the window whose alternation set is empty.
std::vector<RootCoords> empty_region(const LatticeWindow& win, FWeight mu);

/// The 194 nonempty alternation sets realizable on the root lattice, in
/// fixed catalog order. The enumeration suites certify this list against
/// exhaustive window scans.
const std::vector<AltSet>& altset_catalog();

} // namespace sl4
