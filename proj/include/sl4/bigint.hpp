#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sl4 {

/// Arbitrary-precision signed integer (sign + base-2^32 magnitude).
///
/// Partition counts grow cubically and multiplicity sums combine several of
/// them, so coefficient arithmetic must not be able to overflow for any
/// input. Values up to four limbs (128 bits) live inline; anything larger
/// spills to the heap. Only the operations the formulas need are provided:
/// addition, subtraction, multiplication, exact division by a machine word,
/// and comparison.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_i128(__int128 v);

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    BigInt operator-() const;

    /// Divide by d (> 0), asserting the division is exact.
    BigInt& div_exact(std::uint32_t d);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool negative() const { return sign_ < 0; }

    bool fits_longlong() const;
    long long as_longlong() const; // requires fits_longlong()

    bool operator==(const BigInt& o) const;
    std::strong_ordering operator<=>(const BigInt& o) const;

    std::string str() const;

private:
    static constexpr std::size_t kInline = 4;

    int sign_ = 0;       // 0 iff the magnitude is empty
    std::uint32_t n_ = 0; // limb count
    std::array<std::uint32_t, kInline> small_{};
    std::vector<std::uint32_t> heap_; // in use iff n_ > kInline

    const std::uint32_t* limbs() const {
        return n_ > kInline ? heap_.data() : small_.data();
    }
    std::uint32_t* limbs() {
        return n_ > kInline ? heap_.data() : small_.data();
    }
    void set_limb_count(std::uint32_t n); // grows/shrinks storage, keeps data
    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    void add_mag(const BigInt& o);
    void sub_mag_from_larger(const BigInt& o); // |this| >= |o|
};

} // namespace sl4
