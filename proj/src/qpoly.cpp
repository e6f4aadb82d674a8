#include "sl4/qpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace sl4 {

QPoly QPoly::monomial(long long exp, BigInt coeff) {
    QPoly p;
    if (!coeff.is_zero()) p.terms_.emplace_back(exp, std::move(coeff));
    return p;
}

void QPoly::add_term(long long exp, const BigInt& c) {
    if (c.is_zero()) return;
    if (terms_.empty() || exp > terms_.back().first) {
        terms_.emplace_back(exp, c);
        return;
    }
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exp,
        [](const Term& t, long long e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.emplace(it, exp, c);
    }
}

void QPoly::add_term(long long exp, BigInt&& c) {
    if (c.is_zero()) return;
    if (terms_.empty() || exp > terms_.back().first) {
        terms_.emplace_back(exp, std::move(c));
        return;
    }
    add_term(exp, c);
}

void QPoly::merge(const QPoly& o, int sign) {
    if (o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() && b != o.terms_.cend()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            out.emplace_back(b->first, sign > 0 ? b->second : -b->second);
            ++b;
        } else {
            BigInt sum = a->second;
            if (sign > 0)
                sum += b->second;
            else
                sum -= b->second;
            if (!sum.is_zero()) out.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    for (; a != terms_.cend(); ++a) out.push_back(*a);
    for (; b != o.terms_.cend(); ++b)
        out.emplace_back(b->first, sign > 0 ? b->second : -b->second);
    terms_ = std::move(out);
}

QPoly& QPoly::operator+=(const QPoly& o) {
    merge(o, 1);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (&o == this) {
        terms_.clear();
        return *this;
    }
    merge(o, -1);
    return *this;
}

BigInt QPoly::eval_at_one() const {
    BigInt s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

BigInt QPoly::coeff(long long exp) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exp,
        [](const Term& t, long long e) { return t.first < e; });
    return it != terms_.end() && it->first == exp ? it->second : BigInt();
}

long long QPoly::min_exponent() const {
    assert(!terms_.empty());
    return terms_.front().first;
}

long long QPoly::max_exponent() const {
    assert(!terms_.empty());
    return terms_.back().first;
}

bool QPoly::coeffs_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c.negative()) return false;
    return true;
}

std::string QPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c.negative() ? -c : c;
        if (first) {
            if (c.negative()) out << "-";
            first = false;
        } else {
            out << (c.negative() ? " - " : " + ");
        }
        if (e == 0) {
            out << mag.str();
        } else {
            if (!(mag == BigInt(1))) out << mag.str();
            out << "q^" << e;
        }
    }
    return out.str();
}

} // namespace sl4
