// piforge: exact rational numbers on checked 64-bit integers.
//
// Always canonical: denominator > 0, gcd(num, den) = 1, zero is 0/1.
#pragma once

#include <string>

#include "checked.hpp"
#include "errors.hpp"

namespace piforge {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(i64 n, i64 d) : num_(n), den_(d) {
        if (den_ == 0)
            throw StructuralError("rational with zero denominator");
        canonicalize();
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = checked_neg(a.num_);
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_),
                                    checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_),
                        checked_mul(a.den_, b.den_));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw NotInvertible("division by zero rational");
        return Rational(checked_mul(a.num_, b.den_),
                        checked_mul(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross-multiplication keeps order.
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational inverse() const {
        if (num_ == 0)
            throw NotInvertible("inverse of zero rational");
        return Rational(den_, num_);
    }

    // Integer power; negative exponents invert first (zero base throws).
    Rational pow(i64 e) const {
        if (e < 0)
            return inverse().pow(checked_neg(e));
        Rational result(1);
        Rational base = *this;
        while (e > 0) {
            if (e & 1)
                result *= base;
            base = (e > 1) ? base * base : base;
            e >>= 1;
        }
        return result;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1)
            s += "/" + std::to_string(den_);
        return s;
    }

private:
    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        const i64 g = gcd_i64(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    i64 num_;
    i64 den_;
};

} // namespace piforge
