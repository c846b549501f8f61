#ifndef EQUIHITCH_RATIONAL_HPP
#define EQUIHITCH_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "equihitch/errors.hpp"

namespace equihitch {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw internal_error("rational overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw internal_error("rational overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw internal_error("rational overflow in multiplication");
    return r;
}

} // namespace detail

// Exact rational over checked 64-bit integers. Always normalized: gcd(|num|,den)=1,
// den>0. All quantities in this project are desk-scale, so any overflow indicates
// a bug and throws rather than wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw input_error("rational with zero denominator");
        normalize();
    }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Throws internal_error when the value is not an integer: callers use this to
    // assert that a rationally-computed total reduced to an integer.
    long long to_integer() const {
        if (den_ != 1) throw internal_error("expected integer, got " + str());
        return num_;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = detail::checked_sub(0, num_);
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using namespace detail;
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(detail::checked_mul(a.num_, b.num_), detail::checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw input_error("rational division by zero");
        return Rational(detail::checked_mul(a.num_, b.den_), detail::checked_mul(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p" when integral, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = detail::checked_sub(0, num_);
            den_ = detail::checked_sub(0, den_);
        }
        long long g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace equihitch

#endif
