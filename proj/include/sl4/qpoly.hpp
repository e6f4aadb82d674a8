#pragma once

#include "sl4/bigint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sl4 {

/// Polynomial in q with exact integer coefficients.
///
/// Canonical form: terms sorted by ascending exponent with no zero
/// coefficients, so equality is plain coefficient-wise equality.
/// Coefficients are nonnegative for the partition function and signed for
/// intermediate multiplicity sums. Appending in ascending exponent order is
/// constant time, which keeps the closed-form evaluators allocation-light.
class QPoly {
public:
    using Term = std::pair<long long, BigInt>;

    QPoly() = default;

    static QPoly one() { return monomial(0, BigInt(1)); }
    static QPoly monomial(long long exp, BigInt coeff);

    void reserve(std::size_t n) { terms_.reserve(n); }

    /// Accumulate c * q^exp, dropping the term if the sum cancels.
    void add_term(long long exp, const BigInt& c);
    void add_term(long long exp, BigInt&& c);

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    bool is_zero() const { return terms_.empty(); }
    BigInt eval_at_one() const;
    BigInt coeff(long long exp) const; // zero if absent
    long long min_exponent() const;    // requires !is_zero()
    long long max_exponent() const;    // requires !is_zero()
    bool coeffs_nonnegative() const;
    const std::vector<Term>& terms() const { return terms_; }

    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Display form: ascending exponents, coefficient 1 left implicit,
    /// the constant term as a bare integer, "0" for the zero polynomial.
    /// Example: "q^2 + 3q^3 + 2q^4 + q^5".
    std::string str() const;

private:
    std::vector<Term> terms_; // ascending exponents, no zero coefficients

    // signed merge: *this += sign * o
    void merge(const QPoly& o, int sign);
};

} // namespace sl4
