#include "sl4/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

namespace sl4 {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long mag = v > 0 ? (unsigned long long)v
                                   : ~(unsigned long long)v + 1ULL;
    while (mag) {
        small_[n_++] = (std::uint32_t)(mag & 0xffffffffULL);
        mag >>= 32;
    }
}

BigInt BigInt::from_i128(__int128 v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = v > 0 ? 1 : -1;
    unsigned __int128 mag = v > 0 ? (unsigned __int128)v
                                  : ~(unsigned __int128)v + 1;
    while (mag) {
        r.small_[r.n_++] = (std::uint32_t)(mag & 0xffffffffULL);
        mag >>= 32;
    }
    return r;
}

void BigInt::set_limb_count(std::uint32_t n) {
    if (n == n_) return;
    if (n <= kInline) {
        if (n_ > kInline) { // heap -> inline, keep low limbs
            std::memcpy(small_.data(), heap_.data(), n * sizeof(std::uint32_t));
            heap_.clear();
        } else if (n > n_) {
            std::fill(small_.begin() + n_, small_.begin() + n, 0u);
        }
    } else {
        if (n_ <= kInline) { // inline -> heap
            heap_.assign(small_.begin(), small_.begin() + n_);
        }
        heap_.resize(n, 0u);
    }
    n_ = n;
}

void BigInt::trim() {
    while (n_ > 0 && limbs()[n_ - 1] == 0) set_limb_count(n_ - 1);
    if (n_ == 0) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
    const std::uint32_t* pa = a.limbs();
    const std::uint32_t* pb = b.limbs();
    for (std::uint32_t i = a.n_; i-- > 0;)
        if (pa[i] != pb[i]) return pa[i] < pb[i] ? -1 : 1;
    return 0;
}

void BigInt::add_mag(const BigInt& o) {
    const std::uint32_t n = std::max(n_, o.n_);
    set_limb_count(n);
    std::uint32_t* p = limbs();
    const std::uint32_t* q = o.limbs();
    std::uint64_t carry = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t s = carry + p[i] + (i < o.n_ ? q[i] : 0u);
        p[i] = (std::uint32_t)s;
        carry = s >> 32;
    }
    if (carry) {
        set_limb_count(n + 1);
        limbs()[n] = (std::uint32_t)carry;
    }
}

void BigInt::sub_mag_from_larger(const BigInt& o) {
    std::uint32_t* p = limbs();
    const std::uint32_t* q = o.limbs();
    std::int64_t borrow = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::int64_t d = (std::int64_t)p[i] - borrow -
                         (i < o.n_ ? (std::int64_t)q[i] : 0);
        if (d < 0) {
            d += ((std::int64_t)1 << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        p[i] = (std::uint32_t)d;
    }
    assert(borrow == 0);
    trim();
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (&o == this) {
        const BigInt copy = o;
        return *this += copy;
    }
    if (sign_ == o.sign_) {
        add_mag(o);
        return *this;
    }
    const int c = cmp_mag(*this, o);
    if (c == 0) {
        sign_ = 0;
        set_limb_count(0);
    } else if (c > 0) {
        sub_mag_from_larger(o);
    } else {
        BigInt tmp = o;
        tmp.sub_mag_from_larger(*this);
        *this = std::move(tmp);
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (&o == this) {
        sign_ = 0;
        set_limb_count(0);
        return *this;
    }
    BigInt neg = o;
    neg.sign_ = -neg.sign_;
    return *this += neg;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0) return *this;
    if (o.sign_ == 0) {
        sign_ = 0;
        set_limb_count(0);
        return *this;
    }
    // Fast path: single-limb product stays within two limbs.
    if (n_ == 1 && o.n_ == 1) {
        const std::uint64_t prod = (std::uint64_t)limbs()[0] * o.limbs()[0];
        small_[0] = (std::uint32_t)prod;
        small_[1] = (std::uint32_t)(prod >> 32);
        n_ = small_[1] ? 2 : 1;
        sign_ *= o.sign_;
        return *this;
    }
    BigInt out;
    out.sign_ = sign_ * o.sign_;
    out.set_limb_count(n_ + o.n_);
    std::uint32_t* r = out.limbs();
    const std::uint32_t* a = limbs();
    const std::uint32_t* b = o.limbs();
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint64_t carry = 0;
        for (std::uint32_t j = 0; j < o.n_; ++j) {
            std::uint64_t cur = r[i + j] + (std::uint64_t)a[i] * b[j] + carry;
            r[i + j] = (std::uint32_t)cur;
            carry = cur >> 32;
        }
        std::uint32_t k = i + o.n_;
        while (carry) {
            std::uint64_t cur = (std::uint64_t)r[k] + carry;
            r[k] = (std::uint32_t)cur;
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return *this = std::move(out);
}

BigInt& BigInt::div_exact(std::uint32_t d) {
    assert(d != 0);
    std::uint32_t* p = limbs();
    std::uint64_t rem = 0;
    for (std::uint32_t i = n_; i-- > 0;) {
        std::uint64_t cur = (rem << 32) | p[i];
        p[i] = (std::uint32_t)(cur / d);
        rem = cur % d;
    }
    assert(rem == 0 && "div_exact: remainder nonzero");
    trim();
    return *this;
}

bool BigInt::fits_longlong() const {
    if (n_ > 2) return false;
    if (n_ < 2) return true;
    const std::uint64_t mag = ((std::uint64_t)limbs()[1] << 32) | limbs()[0];
    return sign_ > 0 ? mag <= 0x7fffffffffffffffULL
                     : mag <= 0x8000000000000000ULL;
}

long long BigInt::as_longlong() const {
    assert(fits_longlong());
    std::uint64_t mag = 0;
    if (n_ > 1) mag = (std::uint64_t)limbs()[1] << 32;
    if (n_ > 0) mag |= limbs()[0];
    return sign_ < 0 ? -(long long)mag : (long long)mag;
}

bool BigInt::operator==(const BigInt& o) const {
    if (sign_ != o.sign_ || n_ != o.n_) return false;
    return std::memcmp(limbs(), o.limbs(), n_ * sizeof(std::uint32_t)) == 0;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(*this, o);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> work(limbs(), limbs() + n_);
    std::string digits;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | work[i];
            work[i] = (std::uint32_t)(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int i = 0; i < 9; ++i) {
            digits.push_back(char('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

} // namespace sl4
