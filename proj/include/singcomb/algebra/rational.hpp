#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace singcomb::algebra {

// Exact rational scalar. Always reduced to lowest terms, denominator > 0,
// zero stored as 0/1. Backed by GMP; every constructor canonicalizes, so
// downstream code never sees an unreduced value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, like int -> Q
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Accepts "p", "-p", "p/q" with arbitrary-precision parts.
    static Rational from_string(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.v_ != b.v_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.v_ <= b.v_;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return a.v_ > b.v_;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return a.v_ >= b.v_;
    }

    double to_double() const { return v_.get_d(); }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace singcomb::algebra
