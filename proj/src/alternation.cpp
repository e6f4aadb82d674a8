#include "sl4/alternation.hpp"

#include "sl4/parallel.hpp"

#include <cassert>
#include <sstream>
#include <unordered_map>

namespace sl4 {

std::string AltSet::str() const {
    if (mask == 0) return "{}";
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int i = 0; i < kWeylOrder; ++i) {
        if (!contains(i)) continue;
        if (!first) out << ",";
        out << all_elements()[i].word;
        first = false;
    }
    out << "}";
    return out.str();
}

bool is_in_altset(const WeylElement& sigma, FWeight lam, FWeight mu) {
    RWeight shifted = sigma_shifted(sigma, lam, mu);
    return shifted.integral() && shifted.nonnegative();
}

AltSet altset(FWeight lam, FWeight mu) {
    AltSet s;
    for (const WeylElement& e : all_elements())
        if (is_in_altset(e, lam, mu)) s.insert(e.index);
    return s;
}

AltSet altset_via_conditions(RootCoords xyz, FWeight mu) {
    const PQRValues v = pqr_values(xyz, mu);
    AltSet s;
    for (const WeylElement& e : all_elements()) {
        const RootCoords c = pqr_components(v, e);
        if (c.x >= 0 && c.y >= 0 && c.z >= 0) s.insert(e.index);
    }
    return s;
}

AltSet altset_via_partition_positivity(
    FWeight lam, FWeight mu,
    const std::function<QPoly(AlphaTriple)>& partition_fn) {
    AltSet s;
    for (const WeylElement& e : all_elements()) {
        RWeight shifted = sigma_shifted(e, lam, mu);
        if (!shifted.integral()) continue; // integrality gate lives here
        AlphaTriple xi{shifted.q1 / 4, shifted.q2 / 4, shifted.q3 / 4};
        if (partition_fn(xi).eval_at_one().sign() > 0) s.insert(e.index);
    }
    return s;
}

AltSet altset_via_partition_positivity(FWeight lam, FWeight mu) {
    return altset_via_partition_positivity(lam, mu, oracle_triple_sum);
}

namespace {

struct OctantSpec {
    OctantClass label;
    const char* name;
    int members[6]; // -1 padded
};

constexpr OctantSpec kOctantSpecs[] = {
    {OctantClass::A1, "A1", {0, -1, -1, -1, -1, -1}},
    {OctantClass::A2, "A2", {0, 2, -1, -1, -1, -1}},
    {OctantClass::A3, "A3", {0, 2, 3, -1, -1, -1}},
    {OctantClass::A4, "A4", {0, 1, 2, -1, -1, -1}},
    {OctantClass::A5, "A5", {0, 2, 3, 6, -1, -1}},
    {OctantClass::A6, "A6", {0, 1, 3, 7, -1, -1}},
    {OctantClass::A7, "A7", {0, 1, 2, 5, -1, -1}},
    {OctantClass::A8, "A8", {0, 1, 2, 3, 7, -1}},
    {OctantClass::A9, "A9", {0, 1, 2, 3, 6, 7}},
    {OctantClass::A10, "A10", {0, 1, 2, 3, 5, 7}},
    {OctantClass::A11, "A11", {0, 2, 3, 6, 8, 12}},
    {OctantClass::A12, "A12", {0, 1, 2, 4, 5, 9}},
};

} // namespace

const char* octant_class_name(OctantClass c) {
    if (c == OctantClass::Empty) return "empty";
    return kOctantSpecs[(int)c - 1].name;
}

AltSet octant_class_set(OctantClass c) {
    AltSet s;
    if (c == OctantClass::Empty) return s;
    for (int i : kOctantSpecs[(int)c - 1].members)
        if (i >= 0) s.insert(i);
    return s;
}

OctantClass classify_mu_zero_octant(RootCoords xyz) {
    const FWeight lam = fweight_of_root_coords(xyz);
    if (xyz.x < 0 || xyz.y < 0 || xyz.z < 0 || !lam.dominant())
        throw PreconditionError(
            "classify_mu_zero_octant: point outside the dominant octant of "
            "the root lattice");
    const AltSet s = altset_via_conditions(xyz, FWeight{0, 0, 0});
    for (const OctantSpec& spec : kOctantSpecs)
        if (s == octant_class_set(spec.label)) return spec.label;
    assert(s.empty() && "octant set outside the twelve-class table");
    return OctantClass::Empty;
}

LatticeWindow default_verification_window() {
    LatticeWindow win;
    win.x0 = win.y0 = win.z0 = -20;
    win.x1 = win.y1 = win.z1 = 20;
    for (long long c1 = 0; c1 <= 4; ++c1)
        for (long long c2 = 0; c2 <= 4; ++c2)
            for (long long c3 = 0; c3 <= 4; ++c3) {
                FWeight mu{c1, c2, c3};
                if (integral_root_coords(mu)) win.mu_set.push_back(mu);
            }
    return win;
}

int AltSetRegistry::id_of(AltSet s) const {
    for (size_t i = 0; i < sets.size(); ++i)
        if (sets[i] == s) return (int)i;
    return -1;
}

int AltSetRegistry::max_cardinality() const {
    int mx = 0;
    for (const AltSet& s : sets) mx = std::max(mx, s.size());
    return mx;
}

long long AltSetRegistry::nonempty_count() const {
    long long n = 0;
    for (const AltSet& s : sets)
        if (!s.empty()) ++n;
    return n;
}

namespace {

// Distinct masks with counts, in first-occurrence order of one serial scan.
struct LocalRegistry {
    std::vector<std::uint32_t> order;
    std::unordered_map<std::uint32_t, std::uint64_t> counts;

    void add(std::uint32_t mask) {
        auto [it, inserted] = counts.try_emplace(mask, 0);
        if (inserted) order.push_back(mask);
        ++it->second;
    }
};

LocalRegistry scan_window_for_mu(const LatticeWindow& win, FWeight mu) {
    LocalRegistry local;
    for (long long z = win.z0; z <= win.z1; ++z)
        for (long long y = win.y0; y <= win.y1; ++y)
            for (long long x = win.x0; x <= win.x1; ++x)
                local.add(altset_via_conditions({x, y, z}, mu).mask);
    return local;
}

} // namespace

AltSetRegistry enumerate_distinct_altsets(const LatticeWindow& win,
                                          int threads) {
    assert(win.valid());
    const long long nmu = (long long)win.mu_set.size();
    std::vector<LocalRegistry> locals(win.mu_set.size());
    parallel_chunks(nmu, threads, [&](int, long long b, long long e) {
        for (long long i = b; i < e; ++i)
            locals[i] = scan_window_for_mu(win, win.mu_set[i]);
    });

    // Merge in mu order; ids equal those of a single serial scan.
    AltSetRegistry reg;
    std::unordered_map<std::uint32_t, int> ids;
    for (const LocalRegistry& local : locals)
        for (std::uint32_t mask : local.order) {
            auto [it, inserted] = ids.try_emplace(mask, (int)reg.sets.size());
            if (inserted) {
                reg.sets.push_back(AltSet{mask});
                reg.counts.push_back(0);
            }
            reg.counts[it->second] += local.counts.at(mask);
        }
    return reg;
}

Diagram diagram_export(const LatticeWindow& win, FWeight mu) {
    assert(win.valid());
    Diagram d;
    d.mu = mu;
    std::unordered_map<std::uint32_t, int> ids;
    for (long long z = win.z0; z <= win.z1; ++z)
        for (long long y = win.y0; y <= win.y1; ++y)
            for (long long x = win.x0; x <= win.x1; ++x) {
                const RootCoords xyz{x, y, z};
                const AltSet s = altset_via_conditions(xyz, mu);
                auto [it, inserted] =
                    ids.try_emplace(s.mask, (int)d.registry.sets.size());
                if (inserted) {
                    d.registry.sets.push_back(s);
                    d.registry.counts.push_back(0);
                }
                ++d.registry.counts[it->second];
                d.points.push_back(
                    {xyz, fweight_of_root_coords(xyz) + mu, it->second});
            }
    return d;
}

std::vector<RootCoords> empty_region(const LatticeWindow& win, FWeight mu) {
    assert(win.valid());
    std::vector<RootCoords> pts;
    for (long long z = win.z0; z <= win.z1; ++z)
        for (long long y = win.y0; y <= win.y1; ++y)
            for (long long x = win.x0; x <= win.x1; ++x)
                if (altset_via_conditions({x, y, z}, mu).empty())
                    pts.push_back({x, y, z});
    return pts;
}

} // namespace sl4
