#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace laglab {

// Exact rational over 64-bit integers. Intermediates go through __int128 and
// any result that does not fit back into int64 throws, so silent overflow is
// impossible. Plenty of headroom for binomial/threshold arithmetic at desk
// scale (t <= ~40).
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den = 1) { assign(num, den); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    using i128 = __int128;

    void assign(long long num, long long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = num;
        den_ = den;
    }

    static Rational from128(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i128 a = num < 0 ? -num : num;
        i128 b = den;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

// C(n, k) as an exact integer; throws on 64-bit overflow.
inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > INT64_MAX) throw std::overflow_error("binomial: overflow");
    }
    return static_cast<long long>(acc);
}

// n^e as an exact integer; throws on overflow.
inline long long ipow(long long n, int e) {
    __int128 acc = 1;
    for (int i = 0; i < e; ++i) {
        acc *= n;
        if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("ipow: overflow");
    }
    return static_cast<long long>(acc);
}

}  // namespace laglab
