#include "sl4/qpartition.hpp"

#include <algorithm>
#include <cassert>

namespace sl4 {

namespace {

using I128 = __int128;

// Exact halving / sixths for the coefficient backends.
inline long long div_small(long long v, int d) {
    assert(v % d == 0);
    return v / d;
}
inline I128 div_small(I128 v, int d) {
    assert(v % d == 0);
    return v / d;
}
inline BigInt div_small(BigInt v, int d) { return v.div_exact((std::uint32_t)d); }

inline BigInt to_big(long long v) { return BigInt(v); }
inline BigInt to_big(I128 v) { return BigInt::from_i128(v); }
inline BigInt to_big(BigInt v) { return v; }

// ---- per-coefficient kernels -------------------------------------------
//
// Each kernel computes the number of {1r,1b,2}-partitions of t under the
// bounds d+f <= m, d+e+f <= n, e+f <= k for one ordering of (m,n,k).
// An empty summation range means a zero coefficient.

// m,k >= n
template <typename T>
T coeff_mk_ge_n(long long n, long long t) {
    long long L = std::min(t / 2, n - (t + 1) / 2);
    if (L < 0) return T(0);
    return T(L + 1) * T(L + (t & 1) + 1);
}

// outer >= n >= small, i.e. m >= n >= k (small = k) and its mirror
// k >= n >= m (small = m).
template <typename T>
T coeff_outer_n_small(long long n, long long small, long long t) {
    long long F2 = std::min(t / 2, small);
    long long F1 = std::max(t - n, 0LL);
    long long L = F2 - F1;
    if (L < 0) return T(0);
    long long J = small - F2 - (t & 1);
    if (J < 0)
        return div_small(T(L + 1) * T(2 * (small - F2) + L + 2), 2);
    if (J <= L) {
        T v = div_small(T(L + 1) * T(L + 2) - T(F2) * T(F2 + 1) -
                            T(small) * T(small - 1),
                        2);
        v += T(F2) * T(small);
        v += T(small - F2) * T(L);
        v += T(small - F2) * T(t & 1);
        return v;
    }
    return T(L + 1) * T(L + (t & 1) + 1);
}

// n largest: n >= mid >= inner, i.e. n >= m >= k (mid = m, inner = k) and
// its mirror n >= k >= m (mid = k, inner = m).
template <typename T>
T coeff_n_largest(long long n, long long mid, long long inner, long long t) {
    long long F1 = std::max(0LL, t - std::min(mid + inner, n));
    long long F2 = std::min(t / 2, inner);
    if (F2 < F1) return T(0);

    T s1(0);
    if (t - mid < 0) {
        s1 = T(t - F2) * T(F2 + 1);
    } else {
        assert(t - mid <= F2);
        s1 = div_small(T(t - mid) * T(t - mid + 1) + T(F1) * T(F1 - 1) -
                           T(2) * T(F2) * T(F2 + 1) +
                           T(2) * T(mid) * T(t - mid - F1 + 1) +
                           T(2) * T(t) * T(F2 - t + mid),
                       2);
    }

    T s2(0);
    if (t - inner < 0) {
        s2 = T(0);
    } else if (t - inner <= F2) {
        s2 = T(t - inner) * T(t - inner - F1 + 1) -
             div_small(T(t - inner) * T(t - inner + 1) - T(F1) * T(F1 - 1), 2);
    } else {
        s2 = T(t - inner) * T(F2 - F1 + 1) -
             div_small(T(F2) * T(F2 + 1) - T(F1) * T(F1 - 1), 2);
    }

    return s1 - s2 + T(F2 - F1 + 1);
}

// Per-coefficient kernel intermediates are at most a small multiple of
// (m+n+k)^2, so plain 64-bit arithmetic is exact well past 2^25 and
// 128-bit past 2^30; beyond that the BigInt backend takes over.
inline bool fits_i64(AlphaTriple xi) {
    return xi.m + xi.n + xi.k < (1LL << 25);
}
inline bool fits_i128(AlphaTriple xi) {
    return xi.m + xi.n + xi.k < (1LL << 30);
}

template <typename T>
QPoly eval_case(AlphaTriple xi, ClosedCase c) {
    const long long m = xi.m, n = xi.n, k = xi.k;
    const long long top = m + n + k;
    long long lo = 0;
    switch (c) {
    case ClosedCase::MKgeN: lo = m + k - n; break;
    case ClosedCase::MgeNgeK: lo = m; break;
    case ClosedCase::KgeNgeM: lo = k; break;
    case ClosedCase::NgeMgeK:
    case ClosedCase::NgeKgeM: lo = n; break;
    }
    QPoly p;
    p.reserve(size_t(top - lo + 1));
    for (long long i = lo; i <= top; ++i) {
        const long long t = top - i;
        T coeff(0);
        switch (c) {
        case ClosedCase::MKgeN: coeff = coeff_mk_ge_n<T>(n, t); break;
        case ClosedCase::MgeNgeK: coeff = coeff_outer_n_small<T>(n, k, t); break;
        case ClosedCase::KgeNgeM: coeff = coeff_outer_n_small<T>(n, m, t); break;
        case ClosedCase::NgeMgeK: coeff = coeff_n_largest<T>(n, m, k, t); break;
        case ClosedCase::NgeKgeM: coeff = coeff_n_largest<T>(n, k, m, t); break;
        }
        p.add_term(i, to_big(coeff));
    }
    return p;
}

} // namespace

QPoly oracle_triple_sum(AlphaTriple xi) {
    const long long m = xi.m, n = xi.n, k = xi.k;
    QPoly p;
    if (m < 0 || n < 0 || k < 0) return p;
    std::vector<long long> counts(size_t(m + n + k + 1), 0);
    for (long long f = 0; f <= std::min({m, n, k}); ++f)
        for (long long d = 0; d <= std::min(m - f, n - f); ++d)
            for (long long e = 0; e <= std::min(n - d - f, k - f); ++e)
                ++counts[size_t(m + n + k - 2 * f - d - e)];
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i]) p.add_term((long long)i, BigInt(counts[i]));
    return p;
}

QPoly oracle_vector_partitions(AlphaTriple xi) {
    const long long m = xi.m, n = xi.n, k = xi.k;
    QPoly p;
    if (m < 0 || n < 0 || k < 0) return p;
    const long long box = std::max({m, n, k});
    for (long long d = 0; d <= box; ++d)
        for (long long e = 0; e <= box; ++e)
            for (long long f = 0; f <= box; ++f) {
                const long long a = m - d - f;
                const long long b = n - d - e - f;
                const long long c = k - e - f;
                if (a < 0 || b < 0 || c < 0) continue;
                p.add_term(a + b + c + d + e + f, BigInt(1));
            }
    return p;
}

BigInt colored_partitions(long long t, long long m, long long n, long long k) {
    if (t < 0) return BigInt(0);
    long long count = 0;
    for (long long f = 0; 2 * f <= t; ++f)
        for (long long d = 0; d + 2 * f <= t; ++d) {
            const long long e = t - 2 * f - d;
            if (d + f <= m && d + e + f <= n && e + f <= k) ++count;
        }
    return BigInt(count);
}

bool closed_case_applies(ClosedCase c, AlphaTriple xi) {
    if (xi.m < 0 || xi.n < 0 || xi.k < 0) return false;
    switch (c) {
    case ClosedCase::MKgeN: return xi.m >= xi.n && xi.k >= xi.n;
    case ClosedCase::MgeNgeK: return xi.m >= xi.n && xi.n >= xi.k;
    case ClosedCase::KgeNgeM: return xi.k >= xi.n && xi.n >= xi.m;
    case ClosedCase::NgeMgeK: return xi.n >= xi.m && xi.m >= xi.k;
    case ClosedCase::NgeKgeM: return xi.n >= xi.k && xi.k >= xi.m;
    }
    return false;
}

QPoly closed_qpartition_case(AlphaTriple xi, ClosedCase c) {
    if (!closed_case_applies(c, xi))
        throw PreconditionError("closed_qpartition_case: ordering case does not apply");
    if (fits_i64(xi)) return eval_case<long long>(xi, c);
    if (fits_i128(xi)) return eval_case<I128>(xi, c);
    return eval_case<BigInt>(xi, c);
}

QPoly closed_qpartition(AlphaTriple xi) {
    if (xi.m < 0 || xi.n < 0 || xi.k < 0) return QPoly{};
    for (ClosedCase c : {ClosedCase::MKgeN, ClosedCase::MgeNgeK,
                         ClosedCase::KgeNgeM, ClosedCase::NgeMgeK,
                         ClosedCase::NgeKgeM})
        if (closed_case_applies(c, xi)) return closed_qpartition_case(xi, c);
    assert(false && "ordering cases are exhaustive");
    return QPoly{};
}

QPoly closed_qpartition_via_mirror(AlphaTriple xi) {
    if (xi.m < 0 || xi.n < 0 || xi.k < 0) return QPoly{};
    // Evaluate the mirrored ordering branch on the mirrored triple.
    static constexpr std::pair<ClosedCase, ClosedCase> kMirrored[] = {
        {ClosedCase::MKgeN, ClosedCase::MKgeN},
        {ClosedCase::MgeNgeK, ClosedCase::KgeNgeM},
        {ClosedCase::KgeNgeM, ClosedCase::MgeNgeK},
        {ClosedCase::NgeMgeK, ClosedCase::NgeKgeM},
        {ClosedCase::NgeKgeM, ClosedCase::NgeMgeK},
    };
    for (auto [direct, mirrored] : kMirrored)
        if (closed_case_applies(direct, xi))
            return closed_qpartition_case(mirror(xi), mirrored);
    assert(false && "ordering cases are exhaustive");
    return QPoly{};
}

bool count_case_applies(CountCase c, AlphaTriple xi) {
    const long long m = xi.m, n = xi.n, k = xi.k;
    if (m < 0 || n < 0 || k < 0) return false;
    switch (c) {
    case CountCase::MKgeN: return m >= n && k >= n;
    case CountCase::MgeNgeK: return m >= n && n >= k;
    case CountCase::KgeNgeM: return k >= n && n >= m;
    case CountCase::NgeMgeK_Wide: return n >= m && m >= k && n >= m + k;
    case CountCase::NgeKgeM_Wide: return n >= k && k >= m && n >= m + k;
    case CountCase::NgeMgeK_Narrow: return n >= m && m >= k && m + k >= n;
    case CountCase::NgeKgeM_Narrow: return n >= k && k >= m && m + k >= n;
    }
    return false;
}

namespace {

// (mid+1)(mid+2)(mid+3(n-mid)+3)/6 for the two middle-coordinate cases.
template <typename T>
T count_slab(long long n, long long mid) {
    return div_small(T(mid + 1) * T(mid + 2) * T(mid + 3 * (n - mid) + 3), 6);
}

// (inner+1)(inner+2)(3*mid-inner+3)/6 for the wide n cases.
template <typename T>
T count_wide(long long mid, long long inner) {
    return div_small(T(inner + 1) * T(inner + 2) * T(3 * mid - inner + 3), 6);
}

// Cubic count for n >= mid >= inner with mid+inner >= n.
template <typename T>
T count_narrow(long long n, long long mid, long long inner) {
    T acc = T(-2) * T(inner) * T(inner) * T(inner);
    acc -= T(mid - n) * T(mid - n) * T(3 + mid - n);
    acc += T(3) * T(inner) * T(inner) * T(n - 1);
    acc += T(2) * T(3 + 2 * mid + n);
    acc += T(inner) * (T(5) - T(3) * T(mid) * T(mid) - T(3) * T(n - 2) * T(n) +
                       T(mid) * T(3 + 6 * n));
    return div_small(acc, 6);
}

template <typename T>
T count_case(AlphaTriple xi, CountCase c) {
    const long long m = xi.m, n = xi.n, k = xi.k;
    switch (c) {
    case CountCase::MKgeN:
        return div_small(T(n + 1) * T(n + 2) * T(n + 3), 6);
    case CountCase::MgeNgeK: return count_slab<T>(n, k);
    case CountCase::KgeNgeM: return count_slab<T>(n, m);
    case CountCase::NgeMgeK_Wide: return count_wide<T>(m, k);
    case CountCase::NgeKgeM_Wide: return count_wide<T>(k, m);
    case CountCase::NgeMgeK_Narrow: return count_narrow<T>(n, m, k);
    case CountCase::NgeKgeM_Narrow: return count_narrow<T>(n, k, m);
    }
    return T(0);
}

} // namespace

BigInt closed_partition_count_case(AlphaTriple xi, CountCase c) {
    if (!count_case_applies(c, xi))
        throw PreconditionError("closed_partition_count_case: case does not apply");
    return fits_i128(xi) ? to_big(count_case<I128>(xi, c))
                         : count_case<BigInt>(xi, c);
}

BigInt closed_partition_count(AlphaTriple xi) {
    if (xi.m < 0 || xi.n < 0 || xi.k < 0)
        throw NegativeInputError("closed_partition_count: negative coordinate");
    for (CountCase c : {CountCase::MKgeN, CountCase::MgeNgeK,
                        CountCase::KgeNgeM, CountCase::NgeMgeK_Wide,
                        CountCase::NgeKgeM_Wide, CountCase::NgeMgeK_Narrow,
                        CountCase::NgeKgeM_Narrow})
        if (count_case_applies(c, xi)) return closed_partition_count_case(xi, c);
    assert(false && "count cases are exhaustive");
    return BigInt(0);
}

} // namespace sl4
