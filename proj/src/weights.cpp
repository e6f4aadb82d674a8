#include "sl4/weights.hpp"

#include <numeric>
#include <sstream>

namespace sl4 {

std::string RWeight::coord_str(long long quarters) {
    long long g = std::gcd(quarters < 0 ? -quarters : quarters, 4LL);
    if (g == 0) return "0";
    long long num = quarters / g, den = 4 / g;
    std::ostringstream out;
    out << num;
    if (den != 1) out << "/" << den;
    return out.str();
}

RWeight rho() { return {6, 8, 6}; }

RWeight fweight_to_rweight(FWeight w) {
    // w1 = (3a1+2a2+a3)/4, w2 = (a1+2a2+a3)/2, w3 = (a1+2a2+3a3)/4
    return {3 * w.m + 2 * w.n + w.k,
            2 * w.m + 4 * w.n + 2 * w.k,
            w.m + 2 * w.n + 3 * w.k};
}

FWeight rweight_to_fweight(RWeight w) {
    // Cartan matrix applied to the alpha-coordinates: m = 2x-y, n = -x+2y-z,
    // k = -y+2z, evaluated in quarters.
    long long mq = 2 * w.q1 - w.q2;
    long long nq = -w.q1 + 2 * w.q2 - w.q3;
    long long kq = -w.q2 + 2 * w.q3;
    if (mq % 4 != 0 || nq % 4 != 0 || kq % 4 != 0)
        throw NonIntegralError("rweight_to_fweight: image is not an integral weight");
    return {mq / 4, nq / 4, kq / 4};
}

FWeight fweight_of_root_coords(RootCoords c) {
    return {2 * c.x - c.y, -c.x + 2 * c.y - c.z, -c.y + 2 * c.z};
}

static long long floordiv_exact(long long a, long long d) { return a / d; }

std::optional<RootCoords> integral_root_coords(FWeight w) {
    long long a = 3 * w.m + 2 * w.n + w.k;
    long long b = w.m + 2 * w.n + w.k;
    long long c = w.m + 2 * w.n + 3 * w.k;
    auto divisible = [](long long v, long long d) { return v % d == 0; };
    if (!divisible(a, 4) || !divisible(b, 2) || !divisible(c, 4))
        return std::nullopt;
    return RootCoords{floordiv_exact(a, 4), floordiv_exact(b, 2),
                      floordiv_exact(c, 4)};
}

std::optional<RootCoords> integral_root_coords(RWeight w) {
    if (!w.integral()) return std::nullopt;
    return RootCoords{w.q1 / 4, w.q2 / 4, w.q3 / 4};
}

} // namespace sl4
